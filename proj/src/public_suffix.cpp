#include "ucds/public_suffix.hpp"

#include <cctype>

namespace ucds {
namespace {

std::string LowerAscii(std::string_view s) {
  std::string out(s);
  for (char& ch : out) {
    if (static_cast<unsigned char>(ch) < 0x80) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

}  // namespace

PublicSuffixList PublicSuffixList::Parse(std::string_view text, bool include_private) {
  PublicSuffixList list;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;

    if (line.find("===BEGIN PRIVATE DOMAINS===") != std::string_view::npos && !include_private) break;
    // A rule is the first whitespace-delimited token on a non-comment line.
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    line.remove_prefix(start);
    if (line.empty() || line.substr(0, 2) == "//") continue;
    std::size_t stop = 0;
    while (stop < line.size() && !std::isspace(static_cast<unsigned char>(line[stop]))) ++stop;
    std::string rule = LowerAscii(line.substr(0, stop));

    if (rule.front() == '!') {
      list.exception_.insert(rule.substr(1));
    } else if (rule.rfind("*.", 0) == 0) {
      list.wildcard_.insert(rule.substr(2));
    } else {
      list.plain_.insert(std::move(rule));
    }
  }
  return list;
}

const PublicSuffixList& PublicSuffixList::Bundled() {
  static const PublicSuffixList list = Parse(BundledPublicSuffixData());
  return list;
}

std::string PublicSuffixList::PublicSuffix(std::string_view host) const {
  // Walk candidate suffixes from longest to shortest. At a given length an
  // exception outranks the wildcard it carves out of.
  std::size_t start = 0;
  for (;;) {
    const std::string candidate(host.substr(start));
    const std::size_t dot = candidate.find('.');
    const std::string parent = dot == std::string::npos ? std::string() : candidate.substr(dot + 1);
    if (exception_.count(candidate) > 0) return parent;
    if (plain_.count(candidate) > 0) return candidate;
    if (dot != std::string::npos && wildcard_.count(parent) > 0) return candidate;
    if (dot == std::string::npos) return candidate;  // implicit "*" rule
    start += dot + 1;
  }
}

std::optional<std::string> PublicSuffixList::RegistrableDomain(std::string_view host) const {
  const std::string suffix = PublicSuffix(host);
  if (suffix.size() >= host.size()) return std::nullopt;
  const std::string_view head = host.substr(0, host.size() - suffix.size() - 1);
  const std::size_t dot = head.rfind('.');
  return std::string(dot == std::string_view::npos ? head : head.substr(dot + 1)) + "." + suffix;
}

}  // namespace ucds
