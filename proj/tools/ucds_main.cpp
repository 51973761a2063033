// ucds: local chat-export metadata extraction, review and analysis.

#include <CLI11.hpp>

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include "ucds/dataset.hpp"
#include "ucds/error.hpp"
#include "ucds/http_api.hpp"
#include "ucds/payload.hpp"
#include "ucds/report.hpp"
#include "ucds/review_session.hpp"

namespace {

ucds::ApiServer* g_server = nullptr;

void HandleSignal(int) {
  if (g_server != nullptr) g_server->Stop();
}

struct GlobalOptions {
  std::string data_dir;
  bool offline = false;
  int timeout_ms = 5000;
  std::size_t max_depth = 5;
  std::size_t max_export_mb = 50;
};

std::unique_ptr<ucds::ReviewSession> OpenSession(const GlobalOptions& g) {
  ucds::UrlPipelineOptions pipeline_options;
  pipeline_options.shorteners.offline = g.offline;
  pipeline_options.shorteners.max_depth = g.max_depth;
  std::shared_ptr<ucds::RedirectResolver> resolver;
  if (!g.offline) {
    ucds::HttpResolverOptions http;
    http.timeout = std::chrono::milliseconds(g.timeout_ms);
    resolver = std::make_shared<ucds::HttpRedirectResolver>(http);
  }
  ucds::ReviewOptions review;
  review.max_export_bytes = static_cast<std::uintmax_t>(g.max_export_mb) * 1024 * 1024;
  review.delivery.timeout = std::chrono::milliseconds(g.timeout_ms);
  const std::filesystem::path dir = g.data_dir.empty() ? ucds::DefaultDataDirectory() : std::filesystem::path(g.data_dir);
  return std::make_unique<ucds::ReviewSession>(ucds::UrlPipeline(pipeline_options, resolver), review,
                                               ucds::SessionStore(dir));
}

void PrintSummaries(const std::vector<ucds::ChatSummary>& chats) {
  if (chats.empty()) {
    std::cout << "no chats imported\n";
    return;
  }
  std::printf("%-26s %-5s %5s %8s %5s %-10s %-10s %-6s %s\n", "CHAT ID", "LABEL", "USERS", "MESSAGES", "URLS",
              "START", "END", "EDITED", "STATE");
  for (const auto& c : chats) {
    std::printf("%-26s %-5s %5zu %8zu %5zu %-10s %-10s %-6s %s\n", c.chat_id.c_str(), c.chat_label.c_str(),
                c.num_users, c.message_count, c.url_count, ucds::FormatIsoDate(c.start_date).c_str(),
                ucds::FormatIsoDate(c.end_date).c_str(), c.edited ? "yes" : "no",
                std::string(ucds::ChatStateName(c.state)).c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract, review and share privacy-constrained chat metadata"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--data-dir", g.data_dir, "Session directory (default: $UCDS_HOME or ~/.local/share/ucds)");
  app.add_flag("--offline", g.offline, "Never contact URL shorteners");
  app.add_option("--timeout-ms", g.timeout_ms, "Per-request network timeout")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", g.max_depth, "Maximum shortener redirects to follow")->check(CLI::PositiveNumber);
  app.add_option("--max-export-mb", g.max_export_mb, "Largest accepted export file")->check(CLI::PositiveNumber);

  std::string import_file;
  auto* import_cmd = app.add_subcommand("import", "Import a chat export text file");
  import_cmd->add_option("file", import_file)->required()->check(CLI::ExistingFile);

  auto* list_cmd = app.add_subcommand("list", "List imported chats");

  std::string chat_id;
  auto* show_cmd = app.add_subcommand("show", "Print the exact payload that would be submitted");
  show_cmd->add_option("id", chat_id)->required();

  std::size_t url_index = 0;
  auto* delete_cmd = app.add_subcommand("delete-url", "Remove one URL from a chat before sharing");
  delete_cmd->add_option("id", chat_id)->required();
  delete_cmd->add_option("index", url_index)->required();

  std::vector<std::string> http_targets;
  std::vector<std::string> file_targets;
  auto* submit_cmd = app.add_subcommand("submit", "Send a chat's payload");
  submit_cmd->add_option("id", chat_id)->required();
  submit_cmd->add_option("--target", http_targets, "HTTP(S) endpoint receiving a POST");
  submit_cmd->add_option("--out", file_targets, "File (or directory) to write the payload to");

  int port = 8787;
  std::string ui_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the review API on loopback");
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--ui-dir", ui_dir, "Static review UI to serve at /")->check(CLI::ExistingDirectory);

  std::string analyze_dir;
  std::string json_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report over a directory of submitted payloads");
  analyze_cmd->add_option("dir", analyze_dir)->required()->check(CLI::ExistingDirectory);
  analyze_cmd->add_option("--json", json_out, "Also write the machine-readable report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      const ucds::DatasetReport report = ucds::BuildReport(ucds::LoadDataset(analyze_dir));
      std::cout << ucds::RenderText(report);
      if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary | std::ios::trunc);
        out << ucds::RenderJson(report).dump(2) << '\n';
        if (!out) throw ucds::Error(ucds::ErrorCode::kIo, "cannot write " + json_out);
      }
      return 0;
    }

    const auto session_ptr = OpenSession(g);
    ucds::ReviewSession& session = *session_ptr;
    if (*import_cmd) {
      const std::string id = session.ImportFile(import_file);
      const ucds::ExtractedChat chat = session.GetChat(id);
      std::cout << id << "  chat " << chat.chat_label << "  " << chat.num_users << " users, "
                << chat.messages.size() << " messages, " << chat.urls.size() << " urls\n";
    } else if (*list_cmd) {
      PrintSummaries(session.ListChats());
    } else if (*show_cmd) {
      std::cout << session.Preview(chat_id);
    } else if (*delete_cmd) {
      const ucds::ExtractedChat chat = session.DeleteUrl(chat_id, url_index);
      std::cout << "deleted url " << url_index << "; " << chat.urls.size() << " urls remain (edited)\n";
    } else if (*submit_cmd) {
      std::vector<ucds::SubmissionTarget> targets;
      for (const auto& t : http_targets) targets.push_back(ucds::SubmissionTarget::Http(t));
      for (const auto& f : file_targets) targets.push_back(ucds::SubmissionTarget::File(f));
      const ucds::SubmissionReceipt receipt = session.Submit(chat_id, targets);
      std::cout << "submitted chat " << receipt.chat_label << " (" << receipt.payload_bytes << " bytes) to:\n";
      for (const auto& where : receipt.delivered_to) std::cout << "  " << where << '\n';
    } else if (*serve_cmd) {
      ucds::ApiOptions api;
      api.port = port;
      if (!ui_dir.empty()) api.ui_directory = ui_dir;
      ucds::ApiServer server(session, api);
      const int bound = server.Bind();
      if (bound < 0) {
        std::cerr << "cannot bind 127.0.0.1:" << port << '\n';
        return 1;
      }
      g_server = &server;
      std::signal(SIGINT, HandleSignal);
      std::signal(SIGTERM, HandleSignal);
      std::cout << "serving on http://127.0.0.1:" << bound << std::endl;
      server.Serve();
      g_server = nullptr;
    }
  } catch (const ucds::Error& e) {
    std::cerr << "error: " << ucds::ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  return 0;
}
