#include "ucds/redirect.hpp"

#include <set>

#include "ucds/error.hpp"
#include "ucds/url.hpp"

namespace ucds {
namespace {

constexpr std::string_view kYoutubeShortHost = "youtu.be";

std::optional<std::string> HostOf(std::string_view url) {
  auto parts = SplitUrl(url);
  if (!parts) return std::nullopt;
  return parts->host;
}

}  // namespace

std::vector<std::string> DefaultShorteners() {
  return {"bit.ly", "t.co", "tinyurl.com", "goo.gl", "ow.ly",
          "is.gd",  "buff.ly", "youtu.be", "wa.me"};
}

std::string_view ResolutionStatusName(ResolutionStatus status) {
  switch (status) {
    case ResolutionStatus::kNotShortened: return "not_shortened";
    case ResolutionStatus::kStaticAlias: return "static_alias";
    case ResolutionStatus::kResolved: return "resolved";
    case ResolutionStatus::kRedirectLoop: return "redirect_loop";
    case ResolutionStatus::kResolutionFailed: return "resolution_failed";
    case ResolutionStatus::kDepthExceeded: return "depth_exceeded";
    case ResolutionStatus::kOffline: return "offline";
  }
  return "unknown";
}

bool IsShortenerHost(std::string_view host, const std::vector<std::string>& allowlist) {
  if (host.substr(0, 4) == "www.") host.remove_prefix(4);
  for (const std::string& entry : allowlist) {
    if (host == entry) return true;
  }
  return false;
}

Resolution ResolveShortener(const std::string& url, RedirectResolver* resolver,
                            const ShortenerPolicy& policy) {
  Resolution result;
  result.url = url;
  const auto host = HostOf(url);
  if (!host || !IsShortenerHost(*host, policy.allowlist)) return result;

  result.was_shortened = true;
  if (*host == kYoutubeShortHost || *host == "www.youtu.be") {
    result.url = "https://youtube.com/";
    result.status = ResolutionStatus::kStaticAlias;
    return result;
  }
  if (policy.offline || resolver == nullptr) {
    result.status = ResolutionStatus::kOffline;
    return result;
  }

  std::set<std::string> visited{url};
  std::string current = url;
  for (std::size_t depth = 0; depth < policy.max_depth; ++depth) {
    std::optional<std::string> next;
    ++result.network_calls;
    try {
      next = resolver->Resolve(current);
    } catch (const Error&) {
      result.status = ResolutionStatus::kResolutionFailed;
      return result;
    }
    if (!next) {
      // The shortener answered without redirecting; its own page is final.
      result.url = current;
      result.status = ResolutionStatus::kResolved;
      return result;
    }
    if (!visited.insert(*next).second) {
      result.status = ResolutionStatus::kRedirectLoop;
      return result;
    }
    current = *next;
    const auto next_host = HostOf(current);
    if (!next_host || !IsShortenerHost(*next_host, policy.allowlist)) {
      result.url = current;
      result.status = ResolutionStatus::kResolved;
      return result;
    }
  }
  result.status = ResolutionStatus::kDepthExceeded;
  return result;
}

}  // namespace ucds
