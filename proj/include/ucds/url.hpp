#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ucds {

struct UrlParts {
  std::string scheme;  // lowercased; empty when the input had none
  std::string host;    // lowercased ASCII, trailing dot removed
  std::optional<int> port;
  std::string target;  // path + query + fragment, "/" when absent
};

// Lenient split of an absolute URL or a bare "host/path" string. Returns
// nullopt when no well-formed host can be recovered (bad characters, empty
// labels, bracketed IPv6 literals, non-numeric ports).
std::optional<UrlParts> SplitUrl(std::string_view url);

// Returns the http(s) and "www."-prefixed links in `body`, in order. Trailing
// sentence punctuation is not part of a link; a closing parenthesis is kept
// only when it balances one inside the link.
std::vector<std::string> FindUrls(std::string_view body);

// Resolves a Location header value against the URL that produced it.
std::string ResolveReference(std::string_view base, std::string_view reference);

}  // namespace ucds
