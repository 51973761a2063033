#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucds/public_suffix.hpp"

namespace ucds {

// Country codes whose use is mostly aesthetic or brand-driven (twitch.tv,
// bit.ly); they are not reported as ccTLDs.
std::vector<std::string> DefaultCcTldExclusions();

struct ReducedDomain {
  std::string domain;                 // registrable domain, e.g. "bbc.co.uk"
  std::optional<std::string> cc_tld;  // e.g. ".uk"

  friend bool operator==(const ReducedDomain&, const ReducedDomain&) = default;
};

// Reduces a URL (or bare host) to its registrable domain: scheme, userinfo,
// port, path, query, fragment and leading "www." labels are removed and the
// host is lowercased. Throws Error(kUnparseableUrl) for malformed hosts, IP
// literals, and hosts that are themselves public suffixes.
ReducedDomain ReduceToDomain(std::string_view url, const PublicSuffixList& suffixes,
                             const std::vector<std::string>& cctld_exclusions);

// ".xx" when the last label is a two-letter country code not excluded.
std::optional<std::string> ClassifyCcTld(std::string_view domain,
                                         const std::vector<std::string>& exclusions);

// Last label with a leading dot: "bbc.co.uk" -> ".uk".
std::string TopLevelDomain(std::string_view domain);

}  // namespace ucds
