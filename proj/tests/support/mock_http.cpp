#include "mock_http.hpp"

#include <httplib.h>

#include <fstream>

#include "ucds/error.hpp"

namespace ucds::testing {
namespace {

std::string StripPort(const std::string& host) {
  const auto colon = host.rfind(':');
  return colon == std::string::npos ? host : host.substr(0, colon);
}

int StartOnLoopback(httplib::Server& server, std::thread& thread) {
  const int port = server.bind_to_any_port("127.0.0.1");
  thread = std::thread([&server] { server.listen_after_bind(); });
  server.wait_until_ready();
  return port;
}

}  // namespace

MockRedirectServer::MockRedirectServer() : server_(std::make_unique<httplib::Server>()) {
  server_->Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
    ++hits_;
    Route route;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = routes_.find(StripPort(req.get_header_value("Host")) + req.path);
      if (it == routes_.end()) {
        res.status = 404;
        return;
      }
      route = it->second;
    }
    if (route.delay.count() > 0) std::this_thread::sleep_for(route.delay);
    res.status = route.status;
    if (!route.location.empty()) res.set_header("Location", route.location);
    if (route.body_bytes > 0) res.set_content(std::string(route.body_bytes, 'x'), "text/plain");
  });
  port_ = StartOnLoopback(*server_, thread_);
}

MockRedirectServer::~MockRedirectServer() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

void MockRedirectServer::Add(const std::string& host, const std::string& path, Route route) {
  std::lock_guard<std::mutex> lock(mutex_);
  routes_[host + path] = std::move(route);
}

HttpResolverOptions MockRedirectServer::ResolverOptions(const std::vector<std::string>& hosts,
                                                        std::chrono::milliseconds timeout) const {
  HttpResolverOptions options;
  options.timeout = timeout;
  for (const std::string& host : hosts) options.connect_overrides[host] = "http://127.0.0.1:" + std::to_string(port_);
  return options;
}

MockCollector::MockCollector(std::filesystem::path root, int status)
    : root_(std::move(root)), status_(status), server_(std::make_unique<httplib::Server>()) {
  server_->Post(R"(/submit/([A-Za-z0-9_-]+))", [this](const httplib::Request& req, httplib::Response& res) {
    const std::size_t n = ++received_;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      bodies_.push_back(req.body);
    }
    if (status_ >= 200 && status_ < 300) {
      const std::filesystem::path dir = root_ / req.matches[1].str();
      std::filesystem::create_directories(dir);
      std::ofstream(dir / ("submission-" + std::to_string(n) + ".json"), std::ios::binary) << req.body;
    }
    res.status = status_;
    res.set_content("{}", "application/json");
  });
  port_ = StartOnLoopback(*server_, thread_);
}

MockCollector::~MockCollector() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string MockCollector::Url(const std::string& participant) const {
  return "http://127.0.0.1:" + std::to_string(port_) + "/submit/" + participant;
}

std::vector<std::string> MockCollector::bodies() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return bodies_;
}

std::optional<std::string> CountingResolver::Resolve(const std::string& url) {
  ++calls_;
  auto it = hops_.find(url);
  if (it == hops_.end()) return std::nullopt;
  if (it->second.fail) throw Error(ErrorCode::kResolutionFailed, "mock failure for " + url);
  return it->second.target;
}

}  // namespace ucds::testing
