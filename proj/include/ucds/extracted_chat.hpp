#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ucds/calendar.hpp"

namespace ucds {

enum class MessageType { kUrl, kText };

struct UrlRecord {
  std::size_t message_seq = 0;
  std::string domain;
  std::optional<std::string> cc_tld;
  bool was_shortened = false;
  std::size_t alias = 0;
  Date date;

  friend bool operator==(const UrlRecord&, const UrlRecord&) = default;
};

struct UserTally {
  std::size_t alias = 0;
  std::size_t total_messages = 0;
  std::size_t url_messages = 0;
  std::size_t text_messages = 0;

  friend bool operator==(const UserTally&, const UserTally&) = default;
};

struct DailyCount {
  Date date;
  std::size_t alias = 0;
  std::size_t count = 0;

  friend bool operator==(const DailyCount&, const DailyCount&) = default;
};

struct MessageMeta {
  std::size_t seq = 0;
  Date date;
  std::size_t alias = 0;
  MessageType kind = MessageType::kText;

  friend bool operator==(const MessageMeta&, const MessageMeta&) = default;
};

// The only structure that may leave the device. Holds no names, bodies or
// times of day.
struct ExtractedChat {
  std::string chat_id;
  std::string chat_label;
  bool edited = false;
  Date start_date;
  Date end_date;
  std::size_t num_users = 0;
  std::vector<UserTally> per_user;      // ordered by alias
  std::vector<DailyCount> daily_counts; // ordered by (date, alias); zero days omitted
  std::vector<MessageMeta> messages;
  std::vector<UrlRecord> urls;

  friend bool operator==(const ExtractedChat&, const ExtractedChat&) = default;
};

// Human-readable descriptions of every violated invariant; empty when valid.
std::vector<std::string> CheckInvariants(const ExtractedChat& chat);

// Removes urls[url_index], reclassifies its message as text when it has no
// other URL left, adjusts the sender's tallies and sets `edited`. Throws
// Error(kIndexOutOfRange).
void DeleteUrl(ExtractedChat& chat, std::size_t url_index);

// (end_date - start_date) in days / 30.44.
double ChatDurationMonths(const ExtractedChat& chat);

constexpr double kDaysPerMonth = 30.44;

// Half-away-from-zero rounding to one decimal, for display.
double RoundToTenth(double value);

// 24 random lowercase consonants from the OS entropy source.
std::string NewChatId();

}  // namespace ucds
