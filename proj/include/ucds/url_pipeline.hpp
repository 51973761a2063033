#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ucds/domain.hpp"
#include "ucds/public_suffix.hpp"
#include "ucds/redirect.hpp"

namespace ucds {

struct UrlPipelineOptions {
  ShortenerPolicy shorteners;
  std::vector<std::string> cctld_exclusions = DefaultCcTldExclusions();
  std::size_t max_in_flight = 4;
};

struct UrlDiagnostics {
  std::size_t unparseable = 0;
  std::size_t redirect_loops = 0;
  std::size_t resolution_failures = 0;
  std::size_t depth_exceeded = 0;
  std::size_t offline_degraded = 0;
  std::size_t network_calls = 0;
};

struct ProcessedUrl {
  std::optional<ReducedDomain> reduced;  // nullopt: dropped as unparseable
  Resolution resolution;
};

struct PipelineResult {
  std::vector<ProcessedUrl> urls;  // same order as the input
  UrlDiagnostics diagnostics;
};

// Shortener resolution followed by domain reduction. Resolution of distinct
// URLs runs on up to `max_in_flight` threads; output order always matches
// input order.
class UrlPipeline {
 public:
  explicit UrlPipeline(UrlPipelineOptions options = {},
                       std::shared_ptr<RedirectResolver> resolver = nullptr,
                       const PublicSuffixList& suffixes = PublicSuffixList::Bundled());

  PipelineResult Process(const std::vector<std::string>& urls) const;

  const UrlPipelineOptions& options() const { return options_; }

 private:
  UrlPipelineOptions options_;
  std::shared_ptr<RedirectResolver> resolver_;
  const PublicSuffixList* suffixes_;
};

}  // namespace ucds
