#include "ucds/url_pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ucds/error.hpp"

namespace ucds {

UrlPipeline::UrlPipeline(UrlPipelineOptions options, std::shared_ptr<RedirectResolver> resolver,
                         const PublicSuffixList& suffixes)
    : options_(std::move(options)), resolver_(std::move(resolver)), suffixes_(&suffixes) {}

PipelineResult UrlPipeline::Process(const std::vector<std::string>& urls) const {
  std::vector<Resolution> resolutions(urls.size());
  auto resolve = [&](std::size_t i) {
    resolutions[i] = ResolveShortener(urls[i], resolver_.get(), options_.shorteners);
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max<std::size_t>(options_.max_in_flight, 1), urls.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < urls.size(); ++i) resolve(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < urls.size(); i = next++) resolve(i);
      });
    }
  }

  PipelineResult result;
  result.urls.reserve(urls.size());
  UrlDiagnostics& diag = result.diagnostics;
  for (Resolution& resolution : resolutions) {
    diag.network_calls += resolution.network_calls;
    switch (resolution.status) {
      case ResolutionStatus::kRedirectLoop: ++diag.redirect_loops; break;
      case ResolutionStatus::kResolutionFailed: ++diag.resolution_failures; break;
      case ResolutionStatus::kDepthExceeded: ++diag.depth_exceeded; break;
      case ResolutionStatus::kOffline: ++diag.offline_degraded; break;
      default: break;
    }
    ProcessedUrl processed;
    try {
      processed.reduced = ReduceToDomain(resolution.url, *suffixes_, options_.cctld_exclusions);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnparseableUrl) throw;
      ++diag.unparseable;
    }
    processed.resolution = std::move(resolution);
    result.urls.push_back(std::move(processed));
  }
  return result;
}

}  // namespace ucds
