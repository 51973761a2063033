#include "ucds/extractor.hpp"

#include <algorithm>
#include <map>

#include "ucds/error.hpp"
#include "ucds/url.hpp"

namespace ucds {

ExtractionResult Extract(const AnonChatLog& log, const UrlPipeline& pipeline,
                         std::string chat_label) {
  if (log.messages.empty()) {
    throw Error(ErrorCode::kNoUserMessages, "chat has no user messages");
  }

  ExtractionResult result;
  ExtractedChat& chat = result.chat;
  chat.chat_id = NewChatId();
  chat.chat_label = std::move(chat_label);
  chat.num_users = log.user_count;

  struct Occurrence {
    std::size_t message_index;
  };
  std::vector<std::string> links;
  std::vector<Occurrence> occurrences;

  chat.per_user.resize(log.user_count);
  for (std::size_t alias = 0; alias < log.user_count; ++alias) chat.per_user[alias].alias = alias;
  std::map<std::pair<Date, std::size_t>, std::size_t> daily;

  chat.messages.reserve(log.messages.size());
  for (const AnonMessage& m : log.messages) {
    std::vector<std::string> found = FindUrls(m.body);
    const MessageType kind = found.empty() ? MessageType::kText : MessageType::kUrl;
    for (std::string& link : found) {
      links.push_back(std::move(link));
      occurrences.push_back(Occurrence{chat.messages.size()});
    }
    chat.messages.push_back(MessageMeta{m.seq, m.date, m.alias, kind});

    UserTally& tally = chat.per_user.at(m.alias);
    ++tally.total_messages;
    (kind == MessageType::kUrl ? tally.url_messages : tally.text_messages) += 1;
    ++daily[{m.date, m.alias}];
  }

  auto [first, last] = std::minmax_element(
      chat.messages.begin(), chat.messages.end(),
      [](const MessageMeta& a, const MessageMeta& b) { return a.date < b.date; });
  chat.start_date = first->date;
  chat.end_date = last->date;

  for (const auto& [key, count] : daily) {
    chat.daily_counts.push_back(DailyCount{key.first, key.second, count});
  }

  PipelineResult processed = pipeline.Process(links);
  result.diagnostics = processed.diagnostics;
  for (std::size_t i = 0; i < processed.urls.size(); ++i) {
    const ProcessedUrl& p = processed.urls[i];
    if (!p.reduced) continue;
    const MessageMeta& source = chat.messages[occurrences[i].message_index];
    chat.urls.push_back(UrlRecord{source.seq, p.reduced->domain, p.reduced->cc_tld,
                                  p.resolution.was_shortened, source.alias, source.date});
  }
  return result;
}

}  // namespace ucds
