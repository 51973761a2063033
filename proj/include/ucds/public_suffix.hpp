#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

namespace ucds {

// Public-suffix rule matcher (publicsuffix.org format: plain, "*." wildcard
// and "!" exception rules, with the implicit "*" default rule).
class PublicSuffixList {
 public:
  // Parses list text. Rules after "===BEGIN PRIVATE DOMAINS===" are skipped
  // unless `include_private` is set.
  static PublicSuffixList Parse(std::string_view text, bool include_private = false);

  // The snapshot compiled into the library (ICANN section only).
  static const PublicSuffixList& Bundled();

  // Longest matching public suffix of a lowercased host.
  std::string PublicSuffix(std::string_view host) const;

  // Public suffix plus one label; nullopt when `host` is itself a suffix.
  std::optional<std::string> RegistrableDomain(std::string_view host) const;

  std::size_t rule_count() const { return plain_.size() + wildcard_.size() + exception_.size(); }

 private:
  std::unordered_set<std::string> plain_;
  std::unordered_set<std::string> wildcard_;   // stored without the "*."
  std::unordered_set<std::string> exception_;  // stored without the "!"
};

// Bundled list text, generated from data/public_suffix_list.dat at build time.
std::string_view BundledPublicSuffixData();

}  // namespace ucds
