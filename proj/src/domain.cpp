#include "ucds/domain.hpp"

#include <algorithm>
#include <cctype>

#include "ucds/error.hpp"
#include "ucds/url.hpp"

namespace ucds {

std::vector<std::string> DefaultCcTldExclusions() {
  return {".tv", ".io", ".me", ".ly", ".fm", ".co"};
}

ReducedDomain ReduceToDomain(std::string_view url, const PublicSuffixList& suffixes,
                             const std::vector<std::string>& cctld_exclusions) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::kUnparseableUrl, std::string(why) + ": " + std::string(url));
  };
  auto parts = SplitUrl(url);
  if (!parts) throw fail("malformed host");

  std::string_view host = parts->host;
  while (host.substr(0, 4) == "www." && host.find('.', 4) != std::string_view::npos) {
    host.remove_prefix(4);
  }
  const std::string_view last_label = host.substr(host.rfind('.') + 1);
  if (std::all_of(last_label.begin(), last_label.end(),
                  [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw fail("IP address host");
  }
  auto registrable = suffixes.RegistrableDomain(host);
  if (!registrable) throw fail("host is a public suffix");
  if (registrable->substr(0, 4) == "www.") throw fail("registrable label is www");

  ReducedDomain reduced;
  reduced.cc_tld = ClassifyCcTld(*registrable, cctld_exclusions);
  reduced.domain = std::move(*registrable);
  return reduced;
}

std::optional<std::string> ClassifyCcTld(std::string_view domain,
                                         const std::vector<std::string>& exclusions) {
  const std::string tld = TopLevelDomain(domain);
  if (tld.size() != 3 || !std::isalpha(static_cast<unsigned char>(tld[1])) ||
      !std::isalpha(static_cast<unsigned char>(tld[2]))) {
    return std::nullopt;
  }
  if (std::find(exclusions.begin(), exclusions.end(), tld) != exclusions.end()) return std::nullopt;
  return tld;
}

std::string TopLevelDomain(std::string_view domain) {
  const std::size_t dot = domain.rfind('.');
  return "." + std::string(dot == std::string_view::npos ? domain : domain.substr(dot + 1));
}

}  // namespace ucds
