#include "ucds/http_api.hpp"

#include <httplib.h>

#include <stdexcept>

#include "ucds/error.hpp"
#include "ucds/payload.hpp"

namespace ucds {
namespace {

using nlohmann::ordered_json;

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownChat:
    case ErrorCode::kIndexOutOfRange: return 404;
    case ErrorCode::kAlreadySubmitted: return 409;
    case ErrorCode::kOversizedExport: return 413;
    case ErrorCode::kEmptyExport:
    case ErrorCode::kUnrecognizedFormat:
    case ErrorCode::kNoUserMessages:
    case ErrorCode::kInvalidDate: return 422;
    case ErrorCode::kTargetUnreachable: return 502;
    default: return 400;
  }
}

void SendError(httplib::Response& res, int status, std::string_view code, const std::string& message) {
  ordered_json body;
  body["error"] = std::string(code);
  body["message"] = message;
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

ordered_json SummaryJson(const ChatSummary& s) {
  ordered_json j;
  j["chat_id"] = s.chat_id;
  j["chat_label"] = s.chat_label;
  j["num_users"] = s.num_users;
  j["message_count"] = s.message_count;
  j["url_count"] = s.url_count;
  j["start_date"] = FormatIsoDate(s.start_date);
  j["end_date"] = FormatIsoDate(s.end_date);
  j["edited"] = s.edited;
  j["state"] = std::string(ChatStateName(s.state));
  return j;
}

std::vector<SubmissionTarget> ParseTargets(const std::string& body) {
  std::vector<SubmissionTarget> targets;
  if (body.empty()) return targets;
  ordered_json j = ordered_json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw std::invalid_argument("submit body must be a JSON object");
  if (!j.contains("targets")) return targets;
  for (const auto& t : j["targets"]) {
    const std::string type = t.value("type", "");
    if (type == "http") {
      targets.push_back(SubmissionTarget::Http(t.at("url").get<std::string>()));
    } else if (type == "file") {
      targets.push_back(SubmissionTarget::File(t.at("path").get<std::string>()));
    } else {
      throw std::invalid_argument("unknown target type '" + type + "'");
    }
  }
  return targets;
}

bool IsLoopback(const std::string& host) {
  return host == "127.0.0.1" || host == "::1" || host == "localhost";
}

}  // namespace

struct ApiServer::Impl {
  ReviewSession& session;
  ApiOptions options;
  httplib::Server server;

  Impl(ReviewSession& s, ApiOptions o) : session(s), options(std::move(o)) {}

  // Runs `fn`, mapping errors onto JSON error responses.
  template <typename Fn>
  void Guard(httplib::Response& res, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      SendError(res, StatusFor(e.code()), ErrorCodeName(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
      SendError(res, 400, "BadRequest", e.what());
    } catch (const std::invalid_argument& e) {
      SendError(res, 400, "BadRequest", e.what());
    } catch (const std::out_of_range& e) {
      SendError(res, 404, ErrorCodeName(ErrorCode::kIndexOutOfRange), e.what());
    }
  }

  void Routes() {
    server.set_payload_max_length(options_max_body());

    server.Get("/chats", [this](const httplib::Request&, httplib::Response& res) {
      Guard(res, [&] {
        ordered_json list = ordered_json::array();
        for (const ChatSummary& s : session.ListChats()) list.push_back(SummaryJson(s));
        res.set_content(list.dump(2) + "\n", "application/json");
      });
    });

    server.Get(R"(/chats/([a-z]+))", [this](const httplib::Request& req, httplib::Response& res) {
      Guard(res, [&] {
        res.set_content(SerializePayload(session.GetChat(req.matches[1])), "application/json");
      });
    });

    server.Get(R"(/chats/([a-z]+)/preview)", [this](const httplib::Request& req, httplib::Response& res) {
      Guard(res, [&] { res.set_content(session.Preview(req.matches[1]), "application/json"); });
    });

    server.Post("/chats", [this](const httplib::Request& req, httplib::Response& res) {
      Guard(res, [&] {
        RawExport raw;
        if (req.is_multipart_form_data()) {
          if (!req.has_file("file")) throw std::invalid_argument("multipart field 'file' missing");
          const auto file = req.get_file_value("file");
          raw = RawExport{file.content, file.filename};
        } else {
          raw = RawExport{req.body, "upload.txt"};
        }
        const std::string id = session.ImportRaw(raw);
        const ExtractedChat chat = session.GetChat(id);
        ordered_json body;
        body["chat_id"] = id;
        body["chat_label"] = chat.chat_label;
        res.status = 201;
        res.set_content(body.dump(), "application/json");
      });
    });

    server.Delete(R"(/chats/([a-z]+)/urls/(\d+))", [this](const httplib::Request& req, httplib::Response& res) {
      Guard(res, [&] {
        const std::size_t index = std::stoul(req.matches[2]);
        res.set_content(SerializePayload(session.DeleteUrl(req.matches[1], index)), "application/json");
      });
    });

    server.Post(R"(/chats/([a-z]+)/submit)", [this](const httplib::Request& req, httplib::Response& res) {
      Guard(res, [&] {
        const SubmissionReceipt receipt = session.Submit(req.matches[1], ParseTargets(req.body));
        ordered_json body;
        body["chat_id"] = receipt.chat_id;
        body["chat_label"] = receipt.chat_label;
        body["payload_bytes"] = receipt.payload_bytes;
        body["targets"] = receipt.delivered_to;
        res.set_content(body.dump(2) + "\n", "application/json");
      });
    });

    if (options.ui_directory) server.set_mount_point("/", options.ui_directory->string());
  }

  std::size_t options_max_body() const {
    // Multipart framing on top of the export limit.
    return static_cast<std::size_t>(session.options().max_export_bytes) + 64 * 1024;
  }
};

ApiServer::ApiServer(ReviewSession& session, ApiOptions options) {
  if (!IsLoopback(options.host)) {
    throw std::invalid_argument("refusing to listen on non-loopback host " + options.host);
  }
  impl_ = std::make_unique<Impl>(session, std::move(options));
  impl_->Routes();
}

ApiServer::~ApiServer() { Stop(); }

int ApiServer::Bind() {
  if (impl_->options.port == 0) return impl_->server.bind_to_any_port(impl_->options.host);
  return impl_->server.bind_to_port(impl_->options.host, impl_->options.port) ? impl_->options.port : -1;
}

void ApiServer::Serve() { impl_->server.listen_after_bind(); }

void ApiServer::Stop() {
  if (impl_) impl_->server.stop();
}

bool ApiServer::running() const { return impl_->server.is_running(); }

}  // namespace ucds
