#include "ucds/export_parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "ucds/error.hpp"
#include "ucds/utf8.hpp"

namespace ucds {
namespace {

constexpr std::string_view kLeftToRightMark = "\xE2\x80\x8E";
constexpr std::string_view kByteOrderMark = "\xEF\xBB\xBF";
constexpr std::string_view kNarrowNoBreakSpace = "\xE2\x80\xAF";
constexpr std::string_view kNoBreakSpace = "\xC2\xA0";

// Numeric pieces of a header; the date is not yet interpreted because the
// day/month order is decided per file.
struct Header {
  int first = 0;
  int second = 0;
  int year = 0;
  TimeOfDay time;
  std::string_view text;
};

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool Consume(std::string_view token) {
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  // Reads between `min_digits` and `max_digits` decimal digits.
  std::optional<int> Number(std::size_t min_digits, std::size_t max_digits) {
    std::size_t n = 0;
    int value = 0;
    while (pos_ + n < s_.size() && n < max_digits &&
           std::isdigit(static_cast<unsigned char>(s_[pos_ + n]))) {
      value = value * 10 + (s_[pos_ + n] - '0');
      ++n;
    }
    if (n < min_digits) return std::nullopt;
    if (pos_ + n < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + n]))) {
      return std::nullopt;
    }
    pos_ += n;
    return value;
  }

  std::string_view Rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view StripLeadingMarks(std::string_view line) {
  while (line.substr(0, kLeftToRightMark.size()) == kLeftToRightMark) {
    line.remove_prefix(kLeftToRightMark.size());
  }
  return line;
}

// Parses "D/M/YY, H:MM[:SS][ AM|PM]" into `header`.
bool ParseStamp(Cursor& c, bool with_seconds, Header& header) {
  auto a = c.Number(1, 2);
  if (!a || !c.Consume("/")) return false;
  auto b = c.Number(1, 2);
  if (!b || !c.Consume("/")) return false;
  auto y = c.Number(2, 4);
  if (!y || y == 0 || !c.Consume(", ")) return false;
  auto hour = c.Number(1, 2);
  if (!hour || !c.Consume(":")) return false;
  auto minute = c.Number(2, 2);
  if (!minute) return false;
  int second = 0;
  if (with_seconds) {
    if (!c.Consume(":")) return false;
    auto s = c.Number(2, 2);
    if (!s) return false;
    second = *s;
  }

  // Optional meridiem, separated by a regular, no-break or narrow no-break
  // space.
  Cursor probe = c;
  std::optional<bool> pm;
  if (probe.Consume(" ") || probe.Consume(kNarrowNoBreakSpace) || probe.Consume(kNoBreakSpace)) {
    std::string_view rest = probe.Rest();
    if (rest.size() >= 2) {
      const char m0 = static_cast<char>(std::toupper(static_cast<unsigned char>(rest[0])));
      const char m1 = static_cast<char>(std::toupper(static_cast<unsigned char>(rest[1])));
      if ((m0 == 'A' || m0 == 'P') && m1 == 'M') {
        pm = (m0 == 'P');
        probe.Consume(rest.substr(0, 2));
        c = probe;
      }
    }
  }

  int h = *hour;
  if (pm) {
    if (h < 1 || h > 12) return false;
    h = (h % 12) + (*pm ? 12 : 0);
  } else if (h > 23) {
    return false;
  }
  if (*minute > 59 || second > 59) return false;

  header.first = *a;
  header.second = *b;
  header.year = (*y < 100) ? 2000 + *y : *y;
  header.time = TimeOfDay{h, *minute, second};
  return true;
}

std::optional<Header> MatchHeader(std::string_view line, ExportFormat format) {
  Cursor c(StripLeadingMarks(line));
  Header header;
  if (format == ExportFormat::kIos) {
    if (!c.Consume("[")) return std::nullopt;
    if (!ParseStamp(c, /*with_seconds=*/true, header)) return std::nullopt;
    if (!c.Consume("] ")) return std::nullopt;
  } else {
    if (!ParseStamp(c, /*with_seconds=*/false, header)) return std::nullopt;
    if (!c.Consume(" - ")) return std::nullopt;
  }
  header.text = c.Rest();
  return header;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // A terminating newline does not open another line.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool IsWordChar(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

bool ContainsPhrase(std::string_view text, std::string_view phrase) {
  if (phrase.empty()) return false;
  std::size_t pos = 0;
  while ((pos = text.find(phrase, pos)) != std::string_view::npos) {
    const bool left_ok = pos == 0 || !IsWordChar(text[pos - 1]);
    const std::size_t end = pos + phrase.size();
    const bool right_ok = end == text.size() || !IsWordChar(text[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
}

bool ValidDate(int year, int month, int day) {
  if (month < 1 || month > 12 || day < 1 || day > 31) return false;
  return Date{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
              std::chrono::day{static_cast<unsigned>(day)}}
      .ok();
}

}  // namespace

std::string_view ExportFormatName(ExportFormat format) {
  return format == ExportFormat::kAndroid ? "android-style" : "ios-style";
}

std::size_t ChatLog::UserMessageCount() const {
  return static_cast<std::size_t>(std::count_if(
      messages.begin(), messages.end(),
      [](const ParsedMessage& m) { return m.kind == MessageKind::kUser; }));
}

std::vector<std::string> DefaultSystemPhrases() {
  return {"Messages and calls are end-to-end encrypted", "created group", "added", "left",
          "changed the subject"};
}

ExportFormat DetectFormat(const RawExport& raw) {
  if (IsBlank(raw.content)) {
    throw Error(ErrorCode::kEmptyExport, "export is empty");
  }
  std::size_t android = 0;
  std::size_t ios = 0;
  for (std::string_view line : SplitLines(raw.content)) {
    if (MatchHeader(line, ExportFormat::kAndroid)) ++android;
    if (MatchHeader(line, ExportFormat::kIos)) ++ios;
  }
  if (android == 0 && ios == 0) {
    throw Error(ErrorCode::kUnrecognizedFormat, "no line starts with a chat-export timestamp");
  }
  return android > ios ? ExportFormat::kAndroid : ExportFormat::kIos;
}

ChatLog ParseExport(const RawExport& raw, const ParserOptions& options) {
  Utf8Result decoded = SanitizeUtf8(raw.content);
  std::string_view text = decoded.text;
  if (text.substr(0, kByteOrderMark.size()) == kByteOrderMark) {
    text.remove_prefix(kByteOrderMark.size());
  }
  const RawExport clean{std::string(text), raw.source_name};
  const ExportFormat format = DetectFormat(clean);

  ChatLog log;
  log.detected_format = format;
  log.warnings.utf8_replacements = decoded.replacements;

  struct Pending {
    Header header;
    std::string body;
  };
  std::vector<Pending> pending;
  for (std::string_view line : SplitLines(clean.content)) {
    if (auto header = MatchHeader(line, format)) {
      pending.push_back(Pending{*header, std::string(header->text)});
    } else if (pending.empty()) {
      ++log.warnings.orphan_lines;
    } else {
      pending.back().body.push_back('\n');
      pending.back().body.append(line);
    }
  }

  // Day/month order: whichever reading keeps every date valid; month-first
  // wins when both do.
  const bool month_first_ok = std::all_of(pending.begin(), pending.end(), [](const Pending& p) {
    return ValidDate(p.header.year, p.header.first, p.header.second);
  });
  const bool day_first_ok = std::all_of(pending.begin(), pending.end(), [](const Pending& p) {
    return ValidDate(p.header.year, p.header.second, p.header.first);
  });
  if (!month_first_ok && !day_first_ok) {
    throw Error(ErrorCode::kInvalidDate,
                "dates are invalid under both day-first and month-first readings");
  }
  const bool month_first = month_first_ok;

  log.messages.reserve(pending.size());
  for (std::size_t seq = 0; seq < pending.size(); ++seq) {
    Pending& p = pending[seq];
    const int month = month_first ? p.header.first : p.header.second;
    const int day = month_first ? p.header.second : p.header.first;

    ParsedMessage msg;
    msg.seq = seq;
    msg.date = Date{std::chrono::year{p.header.year},
                    std::chrono::month{static_cast<unsigned>(month)},
                    std::chrono::day{static_cast<unsigned>(day)}};
    msg.time_of_day = p.header.time;

    // p.body starts with the header text; split off "Name: " when present.
    std::string_view first_line = p.header.text;
    std::size_t sep = first_line.find(": ");
    std::size_t body_offset = sep == std::string_view::npos ? 0 : sep + 2;
    if (sep == std::string_view::npos && first_line.size() > 1 && first_line.back() == ':' &&
        p.body.size() == first_line.size()) {
      sep = first_line.size() - 1;
      body_offset = first_line.size();
    }
    bool is_user = sep != std::string_view::npos && sep > 0;
    if (is_user) {
      const std::string_view candidate = first_line.substr(0, sep);
      is_user = std::none_of(options.system_phrases.begin(), options.system_phrases.end(),
                             [&](const std::string& phrase) {
                               return ContainsPhrase(candidate, phrase);
                             });
    }
    if (is_user) {
      msg.kind = MessageKind::kUser;
      msg.sender_name = std::string(first_line.substr(0, sep));
      msg.body = p.body.substr(std::min(body_offset, p.body.size()));
    } else {
      msg.kind = MessageKind::kSystem;
      msg.body = std::move(p.body);
    }
    log.messages.push_back(std::move(msg));
  }

  std::stable_sort(log.messages.begin(), log.messages.end(),
                   [](const ParsedMessage& a, const ParsedMessage& b) {
                     if (a.date != b.date) return a.date < b.date;
                     if (a.time_of_day != b.time_of_day) return a.time_of_day < b.time_of_day;
                     return a.seq < b.seq;
                   });

  if (log.UserMessageCount() == 0) {
    throw Error(ErrorCode::kNoUserMessages, "export contains only system messages");
  }
  return log;
}

RawExport LoadExport(const std::filesystem::path& path, std::uintmax_t max_bytes) {
  std::error_code ec;
  const std::uintmax_t size = std::filesystem::file_size(path, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot read " + path.string() + ": " + ec.message());
  }
  if (size > max_bytes) {
    throw Error(ErrorCode::kOversizedExport,
                path.string() + " is " + std::to_string(size) + " bytes; limit is " +
                    std::to_string(max_bytes));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return RawExport{buf.str(), path.filename().string()};
}

}  // namespace ucds
