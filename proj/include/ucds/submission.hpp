#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace ucds {

struct SubmissionTarget {
  enum class Kind { kFile, kHttp };
  Kind kind = Kind::kFile;
  // File path (a directory receives "<chat_id>.json") or http(s) URL.
  std::string location;

  static SubmissionTarget File(std::string path) { return {Kind::kFile, std::move(path)}; }
  static SubmissionTarget Http(std::string url) { return {Kind::kHttp, std::move(url)}; }

  std::string Describe() const;
};

struct DeliveryOptions {
  std::chrono::milliseconds timeout{5000};
};

// Writes or POSTs `payload` verbatim. Returns where it went (the file path
// actually written, or the URL). Throws Error(kTargetUnreachable).
std::string Deliver(const SubmissionTarget& target, const std::string& chat_id,
                    const std::string& payload, const DeliveryOptions& options = {});

struct SubmissionReceipt {
  std::string chat_id;
  std::string chat_label;
  std::size_t payload_bytes = 0;
  std::vector<std::string> delivered_to;
};

}  // namespace ucds
