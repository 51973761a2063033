#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucds/calendar.hpp"
#include "ucds/export_parser.hpp"

namespace ucds {

// Maps sender names to dense indices 0..k-1 in order of each sender's first
// user message. Scoped to one chat, held in memory only; no serializer exists
// for it.
class AliasTable {
 public:
  // Returns the existing index for `name` or appends a new one.
  std::size_t Assign(const std::string& name);
  std::optional<std::size_t> Find(std::string_view name) const;
  const std::string& NameOf(std::size_t index) const { return names_.at(index); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

struct AnonMessage {
  std::size_t seq = 0;
  Date date;
  std::size_t alias = 0;
  std::string body;
};

struct AnonChatLog {
  std::vector<AnonMessage> messages;
  std::size_t user_count = 0;
};

struct Anonymized {
  AnonChatLog log;
  AliasTable aliases;
};

// Drops system messages and replaces each sender with its alias. Bodies pass
// through untouched. Throws Error(kNoUserMessages).
Anonymized Anonymize(const ChatLog& log);

// "User0", "User1", ...
std::string UserLabel(std::size_t index);

// "A".."Z", "AA", "AB", ... (bijective base 26).
std::string ChatLabel(std::size_t index);

}  // namespace ucds
