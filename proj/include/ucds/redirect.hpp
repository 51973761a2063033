#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ucds {

// One redirect hop. Implementations must be safe for concurrent use, must
// bound each request by a timeout, and never interpret response bodies.
class RedirectResolver {
 public:
  virtual ~RedirectResolver() = default;

  // Absolute target of the redirect answered for `url`, or nullopt when the
  // response is not a redirect. Throws Error(kResolutionFailed) on network
  // errors and timeouts.
  virtual std::optional<std::string> Resolve(const std::string& url) = 0;
};

std::vector<std::string> DefaultShorteners();

struct ShortenerPolicy {
  std::vector<std::string> allowlist = DefaultShorteners();
  std::size_t max_depth = 5;
  // No network at all; every shortener except static aliases degrades.
  bool offline = false;
};

enum class ResolutionStatus {
  kNotShortened,   // host not on the allowlist; untouched
  kStaticAlias,    // known alias rewritten without network (youtu.be)
  kResolved,       // followed to a final URL
  kRedirectLoop,
  kResolutionFailed,
  kDepthExceeded,
  kOffline,
};

std::string_view ResolutionStatusName(ResolutionStatus status);

struct Resolution {
  std::string url;  // final URL, or the original one when degraded
  bool was_shortened = false;
  ResolutionStatus status = ResolutionStatus::kNotShortened;
  std::size_t network_calls = 0;

  bool degraded() const {
    return status == ResolutionStatus::kRedirectLoop ||
           status == ResolutionStatus::kResolutionFailed ||
           status == ResolutionStatus::kDepthExceeded || status == ResolutionStatus::kOffline;
  }
};

bool IsShortenerHost(std::string_view host, const std::vector<std::string>& allowlist);

// Follows redirects while the current host is on the allowlist, up to
// `max_depth` hops. Failures never throw: loops, network errors and
// exhausted depth return the original URL with was_shortened set.
// `resolver` may be null, which behaves like offline mode.
Resolution ResolveShortener(const std::string& url, RedirectResolver* resolver,
                            const ShortenerPolicy& policy);

struct HttpResolverOptions {
  std::chrono::milliseconds timeout{5000};
  // host -> origin ("http://127.0.0.1:8080") to connect to instead; the
  // request keeps the original Host header.
  std::map<std::string, std::string> connect_overrides;
  std::string user_agent = "ucds-redirect-resolver/1";
};

// Issues a GET per hop and reads only the status line and headers; the
// body is never downloaded.
class HttpRedirectResolver : public RedirectResolver {
 public:
  explicit HttpRedirectResolver(HttpResolverOptions options = {});
  std::optional<std::string> Resolve(const std::string& url) override;

 private:
  HttpResolverOptions options_;
};

}  // namespace ucds
