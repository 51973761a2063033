#include "ucds/anonymizer.hpp"

#include <algorithm>

#include "ucds/error.hpp"

namespace ucds {

std::size_t AliasTable::Assign(const std::string& name) {
  if (auto found = Find(name)) return *found;
  names_.push_back(name);
  return names_.size() - 1;
}

std::optional<std::size_t> AliasTable::Find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Anonymized Anonymize(const ChatLog& log) {
  Anonymized out;
  for (const ParsedMessage& msg : log.messages) {
    if (msg.kind != MessageKind::kUser) continue;
    const std::size_t alias = out.aliases.Assign(msg.sender_name);
    out.log.messages.push_back(AnonMessage{msg.seq, msg.date, alias, msg.body});
  }
  if (out.log.messages.empty()) {
    throw Error(ErrorCode::kNoUserMessages, "chat has no user messages");
  }
  out.log.user_count = out.aliases.size();
  return out;
}

std::string UserLabel(std::size_t index) { return "User" + std::to_string(index); }

std::string ChatLabel(std::size_t index) {
  std::string label;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    label.insert(label.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return label;
}

}  // namespace ucds
