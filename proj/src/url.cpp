#include "ucds/url.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace ucds {
namespace {

bool IsSchemeChar(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-' || ch == '.';
}

bool IsHostByte(unsigned char ch) {
  return std::isalnum(ch) || ch == '-' || ch == '_' || ch >= 0x80;
}

bool StartsWithNoCase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  }
  return true;
}

bool IsLinkTerminator(char ch) {
  return std::isspace(static_cast<unsigned char>(ch)) || ch == '<' || ch == '>' || ch == '"';
}

}  // namespace

std::optional<UrlParts> SplitUrl(std::string_view url) {
  while (!url.empty() && std::isspace(static_cast<unsigned char>(url.front()))) url.remove_prefix(1);
  while (!url.empty() && std::isspace(static_cast<unsigned char>(url.back()))) url.remove_suffix(1);

  UrlParts parts;
  if (std::size_t sep = url.find("://"); sep != std::string_view::npos) {
    std::string_view scheme = url.substr(0, sep);
    if (scheme.empty() || !std::isalpha(static_cast<unsigned char>(scheme.front())) ||
        !std::all_of(scheme.begin(), scheme.end(), IsSchemeChar)) {
      return std::nullopt;
    }
    for (char ch : scheme) parts.scheme.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    url.remove_prefix(sep + 3);
  }

  const std::size_t authority_end = url.find_first_of("/?#\\");
  std::string_view authority = url.substr(0, authority_end);
  parts.target = authority_end == std::string_view::npos ? "/" : std::string(url.substr(authority_end));
  if (!parts.target.empty() && parts.target.front() != '/') parts.target.insert(parts.target.begin(), '/');

  if (std::size_t at = authority.rfind('@'); at != std::string_view::npos) {
    authority.remove_prefix(at + 1);
  }
  if (!authority.empty() && authority.front() == '[') return std::nullopt;
  if (std::size_t colon = authority.find(':'); colon != std::string_view::npos) {
    std::string_view port_text = authority.substr(colon + 1);
    authority = authority.substr(0, colon);
    if (!port_text.empty()) {
      int port = 0;
      auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
      if (ec != std::errc() || ptr != port_text.data() + port_text.size() || port > 65535) {
        return std::nullopt;
      }
      parts.port = port;
    }
  }
  if (!authority.empty() && authority.back() == '.') authority.remove_suffix(1);
  if (authority.empty() || authority.size() > 253) return std::nullopt;

  std::size_t label_len = 0;
  for (char ch : authority) {
    if (ch == '.') {
      if (label_len == 0) return std::nullopt;
      label_len = 0;
      continue;
    }
    if (!IsHostByte(static_cast<unsigned char>(ch)) || ++label_len > 63) return std::nullopt;
  }
  if (label_len == 0) return std::nullopt;

  parts.host.reserve(authority.size());
  for (char ch : authority) {
    parts.host.push_back(static_cast<unsigned char>(ch) < 0x80
                             ? static_cast<char>(std::tolower(static_cast<unsigned char>(ch)))
                             : ch);
  }
  return parts;
}

std::vector<std::string> FindUrls(std::string_view body) {
  std::vector<std::string> urls;
  std::size_t i = 0;
  while (i < body.size()) {
    const std::string_view rest = body.substr(i);
    std::size_t prefix_len = 0;
    if (StartsWithNoCase(rest, "https://")) {
      prefix_len = 8;
    } else if (StartsWithNoCase(rest, "http://")) {
      prefix_len = 7;
    } else if (StartsWithNoCase(rest, "www.")) {
      prefix_len = 4;
    }
    const bool boundary =
        i == 0 || !(std::isalnum(static_cast<unsigned char>(body[i - 1])) || body[i - 1] == '.' ||
                    body[i - 1] == '/' || body[i - 1] == '@' || body[i - 1] == '-');
    if (prefix_len == 0 || !boundary) {
      ++i;
      continue;
    }

    std::size_t end = i;
    while (end < body.size() && !IsLinkTerminator(body[end])) ++end;
    std::string_view link = body.substr(i, end - i);

    for (;;) {
      if (link.empty()) break;
      const char last = link.back();
      if (last == '.' || last == ',' || last == '!' || last == '?') {
        link.remove_suffix(1);
      } else if (last == ')' &&
                 std::count(link.begin(), link.end(), '(') < std::count(link.begin(), link.end(), ')')) {
        link.remove_suffix(1);
      } else {
        break;
      }
    }
    if (link.size() > prefix_len && IsHostByte(static_cast<unsigned char>(link[prefix_len]))) {
      urls.emplace_back(link);
    }
    i = end;
  }
  return urls;
}

std::string ResolveReference(std::string_view base, std::string_view reference) {
  if (reference.find("://") != std::string_view::npos) {
    const std::size_t sep = reference.find("://");
    if (std::all_of(reference.begin(), reference.begin() + static_cast<std::ptrdiff_t>(sep), IsSchemeChar)) {
      return std::string(reference);
    }
  }
  const std::size_t scheme_end = base.find("://");
  const std::string_view scheme = scheme_end == std::string_view::npos ? "http" : base.substr(0, scheme_end);
  const std::size_t authority_start = scheme_end == std::string_view::npos ? 0 : scheme_end + 3;
  std::size_t authority_end = base.find_first_of("/?#", authority_start);
  if (authority_end == std::string_view::npos) authority_end = base.size();
  const std::string_view origin = base.substr(0, authority_end);

  if (reference.substr(0, 2) == "//") return std::string(scheme) + ":" + std::string(reference);
  if (!reference.empty() && reference.front() == '/') return std::string(origin) + std::string(reference);

  // Relative path: replace everything after the last '/' of the base path.
  std::string_view path = base.substr(authority_end);
  path = path.substr(0, path.find_first_of("?#"));
  const std::size_t slash = path.rfind('/');
  const std::string_view dir = slash == std::string_view::npos ? "/" : path.substr(0, slash + 1);
  return std::string(origin) + std::string(dir) + std::string(reference);
}

}  // namespace ucds
