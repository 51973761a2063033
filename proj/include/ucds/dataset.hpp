#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ucds/extracted_chat.hpp"

namespace ucds {

struct Participant {
  std::string id;
  std::vector<ExtractedChat> chats;
};

struct Dataset {
  std::vector<Participant> participants;
};

// Orders strings with embedded numbers numerically: "P2" < "P10".
bool NaturalLess(std::string_view a, std::string_view b);

// One subdirectory per participant, each holding *.json payloads. Every
// payload must validate; participants without payloads are skipped.
// Participants are ordered naturally by id, chats by label then filename.
// Throws Error(kIo) or Error(kInvalidPayload).
Dataset LoadDataset(const std::filesystem::path& root);

}  // namespace ucds
