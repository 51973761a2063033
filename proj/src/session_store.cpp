#include "ucds/session_store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ucds/error.hpp"
#include "ucds/payload.hpp"

namespace ucds {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr const char* kSessionFile = "session.json";

ChatState StateFromName(const std::string& name) {
  if (name == "imported") return ChatState::kImported;
  if (name == "reviewed") return ChatState::kReviewed;
  if (name == "submitted") return ChatState::kSubmitted;
  throw Error(ErrorCode::kInvalidPayload, "unknown chat state " + name);
}

}  // namespace

std::string_view ChatStateName(ChatState state) {
  switch (state) {
    case ChatState::kImported: return "imported";
    case ChatState::kReviewed: return "reviewed";
    case ChatState::kSubmitted: return "submitted";
  }
  return "unknown";
}

SessionStore::SessionStore(fs::path directory) : directory_(std::move(directory)) {}

std::vector<StoredChat> SessionStore::Load() const {
  const fs::path path = directory_ / kSessionFile;
  std::error_code ec;
  if (!fs::exists(path, ec)) return {};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();

  ordered_json doc = ordered_json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded() || !doc.contains("chats") || !doc["chats"].is_array()) {
    throw Error(ErrorCode::kInvalidPayload, "corrupt session file " + path.string());
  }
  std::vector<StoredChat> chats;
  for (const auto& entry : doc["chats"]) {
    if (!entry.contains("state") || !entry.contains("payload")) {
      throw Error(ErrorCode::kInvalidPayload, "corrupt session entry in " + path.string());
    }
    chats.push_back(StoredChat{ParsePayload(entry["payload"].dump()),
                               StateFromName(entry["state"].get<std::string>())});
  }
  return chats;
}

void SessionStore::Save(const std::vector<StoredChat>& chats) const {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + directory_.string() + ": " + ec.message());

  ordered_json doc;
  doc["chats"] = ordered_json::array();
  for (const StoredChat& stored : chats) {
    ordered_json entry;
    entry["state"] = std::string(ChatStateName(stored.state));
    entry["payload"] = PayloadJson(stored.chat);
    doc["chats"].push_back(std::move(entry));
  }
  const fs::path path = directory_ / kSessionFile;
  const fs::path tmp = directory_ / (std::string(kSessionFile) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot replace " + path.string() + ": " + ec.message());
}

fs::path DefaultDataDirectory() {
  if (const char* home = std::getenv("UCDS_HOME"); home && *home) return home;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return fs::path(xdg) / "ucds";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".local" / "share" / "ucds";
  }
  return fs::current_path() / ".ucds";
}

}  // namespace ucds
