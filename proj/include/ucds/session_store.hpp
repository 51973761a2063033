#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "ucds/extracted_chat.hpp"

namespace ucds {

enum class ChatState { kImported, kReviewed, kSubmitted };

std::string_view ChatStateName(ChatState state);

struct StoredChat {
  ExtractedChat chat;
  ChatState state = ChatState::kImported;
};

// Persists extracted chats (never raw exports) as <dir>/session.json.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path directory);

  // Empty when no session file exists yet. Throws Error(kIo) or
  // Error(kInvalidPayload) on a corrupt file.
  std::vector<StoredChat> Load() const;
  void Save(const std::vector<StoredChat>& chats) const;

  const std::filesystem::path& directory() const { return directory_; }

 private:
  std::filesystem::path directory_;
};

// $UCDS_HOME, else $XDG_DATA_HOME/ucds, else ~/.local/share/ucds.
std::filesystem::path DefaultDataDirectory();

}  // namespace ucds
