#include "ucds/submission.hpp"

#include <httplib.h>

#include <filesystem>
#include <fstream>

#include "ucds/error.hpp"
#include "ucds/url.hpp"

namespace ucds {
namespace {

namespace fs = std::filesystem;

std::string WriteFile(const SubmissionTarget& target, const std::string& chat_id,
                      const std::string& payload) {
  fs::path path = target.location;
  std::error_code ec;
  if (fs::is_directory(path, ec) || target.location.ends_with('/')) {
    fs::create_directories(path, ec);
    path /= chat_id + ".json";
  } else if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw Error(ErrorCode::kTargetUnreachable, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kTargetUnreachable, "cannot write " + path.string() + ": " + ec.message());
  return path.string();
}

std::string Post(const SubmissionTarget& target, const std::string& payload,
                 const DeliveryOptions& options) {
  auto parts = SplitUrl(target.location);
  if (!parts || (parts->scheme != "http" && parts->scheme != "https")) {
    throw Error(ErrorCode::kTargetUnreachable, "not an http(s) url: " + target.location);
  }
  std::string origin = parts->scheme + "://" + parts->host;
  if (parts->port) origin += ":" + std::to_string(*parts->port);
  httplib::Client client(origin);
  if (!client.is_valid()) throw Error(ErrorCode::kTargetUnreachable, "no client for " + origin);
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(options.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  auto result = client.Post(parts->target, payload, "application/json");
  if (!result) {
    throw Error(ErrorCode::kTargetUnreachable,
                target.location + ": " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw Error(ErrorCode::kTargetUnreachable,
                target.location + " answered HTTP " + std::to_string(result->status));
  }
  return target.location;
}

}  // namespace

std::string SubmissionTarget::Describe() const {
  return (kind == Kind::kFile ? "file:" : "http:") + location;
}

std::string Deliver(const SubmissionTarget& target, const std::string& chat_id,
                    const std::string& payload, const DeliveryOptions& options) {
  return target.kind == SubmissionTarget::Kind::kFile ? WriteFile(target, chat_id, payload)
                                                      : Post(target, payload, options);
}

}  // namespace ucds
