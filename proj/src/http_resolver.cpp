#include <httplib.h>

#include "ucds/error.hpp"
#include "ucds/redirect.hpp"
#include "ucds/url.hpp"

namespace ucds {

HttpRedirectResolver::HttpRedirectResolver(HttpResolverOptions options)
    : options_(std::move(options)) {}

std::optional<std::string> HttpRedirectResolver::Resolve(const std::string& url) {
  auto parts = SplitUrl(url);
  if (!parts) throw Error(ErrorCode::kResolutionFailed, "unparseable url: " + url);
  const std::string scheme = parts->scheme.empty() ? "http" : parts->scheme;
  if (scheme != "http" && scheme != "https") {
    throw Error(ErrorCode::kResolutionFailed, "unsupported scheme: " + scheme);
  }
  const int default_port = scheme == "https" ? 443 : 80;

  std::string origin = scheme + "://" + parts->host + ":" + std::to_string(parts->port.value_or(default_port));
  if (auto it = options_.connect_overrides.find(parts->host); it != options_.connect_overrides.end()) {
    origin = it->second;
  }

  httplib::Client client(origin);
  if (!client.is_valid()) {
    throw Error(ErrorCode::kResolutionFailed, "no client for scheme " + scheme);
  }
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());
  client.set_follow_location(false);

  std::string host_header = parts->host;
  if (parts->port && *parts->port != default_port) host_header += ":" + std::to_string(*parts->port);
  const httplib::Headers headers{{"Host", host_header}, {"User-Agent", options_.user_agent}};

  int status = 0;
  std::string location;
  auto result = client.Get(
      parts->target, headers,
      [&](const httplib::Response& response) {
        status = response.status;
        location = response.get_header_value("Location");
        return false;  // stop before the body
      },
      [](const char*, std::size_t) { return false; });

  if (status == 0) {
    throw Error(ErrorCode::kResolutionFailed,
                "request to " + parts->host + " failed: " + httplib::to_string(result.error()));
  }
  if (status >= 300 && status < 400 && !location.empty()) {
    return ResolveReference(url, location);
  }
  return std::nullopt;
}

}  // namespace ucds
