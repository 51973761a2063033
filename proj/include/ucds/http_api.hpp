#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "ucds/review_session.hpp"

namespace ucds {

struct ApiOptions {
  std::string host = "127.0.0.1";  // loopback addresses only
  int port = 8787;
  // Static files (a built review UI) served at "/" when set.
  std::optional<std::filesystem::path> ui_directory;
};

// Loopback HTTP front end over a ReviewSession:
//   GET    /chats                      summaries
//   GET    /chats/{id}                 payload JSON
//   GET    /chats/{id}/preview         exact payload bytes (marks reviewed)
//   POST   /chats                      multipart "file" field or raw text body
//   DELETE /chats/{id}/urls/{index}    updated payload JSON
//   POST   /chats/{id}/submit          optional {"targets":[{"type","url"|"path"}]}
// Errors are {"error": <code>, "message": <text>} with a 4xx/5xx status.
class ApiServer {
 public:
  // Throws std::invalid_argument for a non-loopback host.
  ApiServer(ReviewSession& session, ApiOptions options = {});
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Binds the configured port (0 picks a free one); returns the bound port
  // or -1.
  int Bind();
  // Blocks serving requests until Stop().
  void Serve();
  void Stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ucds
