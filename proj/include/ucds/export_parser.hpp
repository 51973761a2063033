#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ucds/calendar.hpp"

namespace ucds {

// The two chat-export dialects:
//   android-style  "D/M/YY, HH:MM - Name: text"
//   ios-style      "[D/M/YY, HH:MM:SS] Name: text"
// Both accept an optional AM/PM suffix and two- or four-digit years.
enum class ExportFormat { kAndroid, kIos };

std::string_view ExportFormatName(ExportFormat format);

// Untrusted export text. `source_name` is the local filename and never leaves
// the device.
struct RawExport {
  std::string content;
  std::string source_name;
};

enum class MessageKind { kUser, kSystem };

struct ParsedMessage {
  std::size_t seq = 0;
  Date date;
  TimeOfDay time_of_day;  // local-only
  std::string sender_name;  // empty for system messages
  std::string body;
  MessageKind kind = MessageKind::kUser;
};

struct ParserWarnings {
  // Invalid UTF-8 sequences replaced with U+FFFD.
  std::size_t utf8_replacements = 0;
  // Non-header lines before the first header; they have no message to join.
  std::size_t orphan_lines = 0;
};

struct ChatLog {
  std::vector<ParsedMessage> messages;
  ExportFormat detected_format = ExportFormat::kIos;
  ParserWarnings warnings;

  std::size_t UserMessageCount() const;
};

std::vector<std::string> DefaultSystemPhrases();

struct ParserOptions {
  // A header whose text carries no "Name: " separator, or whose would-be
  // sender contains one of these phrases as a whole word sequence, is a
  // system message.
  std::vector<std::string> system_phrases = DefaultSystemPhrases();
};

// Picks the dialect matching the majority of line starts; ties go to
// ios-style. Throws Error(kEmptyExport) or Error(kUnrecognizedFormat).
ExportFormat DetectFormat(const RawExport& raw);

// Throws Error with kEmptyExport, kUnrecognizedFormat, kInvalidDate or
// kNoUserMessages.
ChatLog ParseExport(const RawExport& raw, const ParserOptions& options = {});

// Reads an export from disk. Throws Error(kOversizedExport) when the file is
// larger than `max_bytes`, Error(kIo) when unreadable.
RawExport LoadExport(const std::filesystem::path& path, std::uintmax_t max_bytes);

}  // namespace ucds
