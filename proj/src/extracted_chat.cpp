#include "ucds/extracted_chat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string_view>

#include "ucds/error.hpp"

namespace ucds {

std::vector<std::string> CheckInvariants(const ExtractedChat& chat) {
  std::vector<std::string> problems;
  auto fail = [&](std::string what) { problems.push_back(std::move(what)); };

  if (chat.messages.empty()) {
    fail("no messages");
    return problems;
  }
  auto [min_it, max_it] = std::minmax_element(
      chat.messages.begin(), chat.messages.end(),
      [](const MessageMeta& a, const MessageMeta& b) { return a.date < b.date; });
  if (chat.start_date != min_it->date) fail("start_date is not the earliest message date");
  if (chat.end_date != max_it->date) fail("end_date is not the latest message date");

  std::map<std::size_t, UserTally> expected;
  std::map<std::pair<Date, std::size_t>, std::size_t> daily;
  std::set<std::size_t> seqs;
  std::map<std::size_t, const MessageMeta*> by_seq;
  for (const MessageMeta& m : chat.messages) {
    UserTally& t = expected[m.alias];
    t.alias = m.alias;
    ++t.total_messages;
    (m.kind == MessageType::kUrl ? t.url_messages : t.text_messages) += 1;
    ++daily[{m.date, m.alias}];
    if (!seqs.insert(m.seq).second) fail("duplicate message seq " + std::to_string(m.seq));
    by_seq[m.seq] = &m;
  }
  if (chat.num_users != expected.size()) fail("num_users does not match distinct aliases");
  if (!expected.empty() && expected.rbegin()->first + 1 != expected.size()) {
    fail("aliases are not dense from 0");
  }

  std::size_t tally_sum = 0;
  if (chat.per_user.size() != expected.size()) fail("per_user has wrong number of rows");
  for (const UserTally& t : chat.per_user) {
    if (t.url_messages + t.text_messages != t.total_messages) {
      fail("url + text != total for alias " + std::to_string(t.alias));
    }
    auto it = expected.find(t.alias);
    if (it == expected.end() || !(it->second == t)) {
      fail("per_user row disagrees with messages for alias " + std::to_string(t.alias));
    }
    tally_sum += t.total_messages;
  }
  if (tally_sum != chat.messages.size()) fail("sum of per-user totals != message count");

  std::size_t daily_sum = 0;
  for (const DailyCount& d : chat.daily_counts) {
    daily_sum += d.count;
    auto it = daily.find({d.date, d.alias});
    if (d.count == 0 || it == daily.end() || it->second != d.count) {
      fail("daily count mismatch on " + FormatIsoDate(d.date));
    }
  }
  if (daily_sum != chat.messages.size()) fail("sum of daily counts != message count");

  for (const UrlRecord& u : chat.urls) {
    auto it = by_seq.find(u.message_seq);
    if (it == by_seq.end() || it->second->kind != MessageType::kUrl) {
      fail("url record points at a non-url message " + std::to_string(u.message_seq));
    } else if (it->second->alias != u.alias || it->second->date != u.date) {
      fail("url record sender/date disagree with its message");
    }
  }
  return problems;
}

void DeleteUrl(ExtractedChat& chat, std::size_t url_index) {
  if (url_index >= chat.urls.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "url index " + std::to_string(url_index) +
                                                 " out of range (" +
                                                 std::to_string(chat.urls.size()) + " urls)");
  }
  const std::size_t seq = chat.urls[url_index].message_seq;
  chat.urls.erase(chat.urls.begin() + static_cast<std::ptrdiff_t>(url_index));
  chat.edited = true;

  const bool still_has_url = std::any_of(chat.urls.begin(), chat.urls.end(),
                                         [&](const UrlRecord& u) { return u.message_seq == seq; });
  if (still_has_url) return;

  auto msg = std::find_if(chat.messages.begin(), chat.messages.end(),
                          [&](const MessageMeta& m) { return m.seq == seq; });
  if (msg == chat.messages.end() || msg->kind != MessageType::kUrl) return;
  msg->kind = MessageType::kText;
  for (UserTally& t : chat.per_user) {
    if (t.alias == msg->alias) {
      --t.url_messages;
      ++t.text_messages;
    }
  }
}

double ChatDurationMonths(const ExtractedChat& chat) {
  return static_cast<double>(DaysBetween(chat.start_date, chat.end_date)) / kDaysPerMonth;
}

double RoundToTenth(double value) { return std::round(value * 10.0) / 10.0; }

std::string NewChatId() {
  // No vowels, so an id cannot spell a word that also occurs in a body.
  static constexpr std::string_view kAlphabet = "bcdfghjklmnpqrstvwxz";
  std::random_device entropy;
  std::uniform_int_distribution<std::size_t> pick(0, kAlphabet.size() - 1);
  std::string id(24, 'b');
  for (char& ch : id) ch = kAlphabet[pick(entropy)];
  return id;
}

}  // namespace ucds
