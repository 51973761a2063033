#include "ucds/stats.hpp"

#include <algorithm>
#include <map>

#include "ucds/domain.hpp"
#include "ucds/error.hpp"

namespace ucds {
namespace {

std::vector<FrequencyRow> ToRows(const std::map<std::string, std::size_t>& counts, std::size_t total) {
  std::vector<FrequencyRow> rows;
  rows.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    rows.push_back(FrequencyRow{key, count, 100.0 * static_cast<double>(count) / static_cast<double>(total)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FrequencyRow& a, const FrequencyRow& b) { return a.count > b.count; });
  return rows;
}

template <typename KeyFn>
std::vector<FrequencyRow> Frequency(const Dataset& dataset, KeyFn key_of) {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const Participant& p : dataset.participants) {
    for (const ExtractedChat& chat : p.chats) {
      for (const UrlRecord& u : chat.urls) {
        ++counts[key_of(u)];
        ++total;
      }
    }
  }
  if (total == 0) throw Error(ErrorCode::kNoUrls, "dataset contains no links");
  return ToRows(counts, total);
}

}  // namespace

double Median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "median of an empty list");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

double MedianOfMedians(const Dataset& dataset, const ChatMetric& metric) {
  std::vector<double> participant_medians;
  for (const Participant& p : dataset.participants) {
    std::vector<double> values;
    for (const ExtractedChat& chat : p.chats) {
      if (auto v = metric(chat)) values.push_back(*v);
    }
    if (!values.empty()) participant_medians.push_back(Median(std::move(values)));
  }
  if (participant_medians.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no participant has a chat with this metric");
  }
  return Median(std::move(participant_medians));
}

double PctUrlMessages(const ExtractedChat& chat) {
  if (chat.messages.empty()) throw Error(ErrorCode::kEmptyInput, "chat has no messages");
  const auto urls = std::count_if(chat.messages.begin(), chat.messages.end(),
                                  [](const MessageMeta& m) { return m.kind == MessageType::kUrl; });
  return 100.0 * static_cast<double>(urls) / static_cast<double>(chat.messages.size());
}

double TopSharerShare(const ExtractedChat& chat) {
  if (chat.urls.empty()) throw Error(ErrorCode::kNoUrls, "chat has no links");
  std::map<std::size_t, std::size_t> per_alias;
  for (const UrlRecord& u : chat.urls) ++per_alias[u.alias];
  std::size_t top = 0;
  for (const auto& [alias, count] : per_alias) top = std::max(top, count);
  return static_cast<double>(top) / static_cast<double>(chat.urls.size());
}

double MedianDomainShares(const ExtractedChat& chat) {
  if (chat.urls.empty()) throw Error(ErrorCode::kNoUrls, "chat has no links");
  std::map<std::string, std::size_t> per_domain;
  for (const UrlRecord& u : chat.urls) ++per_domain[u.domain];
  std::vector<double> counts;
  for (const auto& [domain, count] : per_domain) counts.push_back(static_cast<double>(count));
  return Median(std::move(counts));
}

std::vector<FrequencyRow> DomainFrequency(const Dataset& dataset) {
  return Frequency(dataset, [](const UrlRecord& u) { return u.domain; });
}

std::vector<FrequencyRow> TldFrequency(const Dataset& dataset) {
  return Frequency(dataset, [](const UrlRecord& u) { return TopLevelDomain(u.domain); });
}

CcTldPresence CcTldPresenceOf(const Dataset& dataset) {
  CcTldPresence presence;
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const Participant& p : dataset.participants) {
    for (const ExtractedChat& chat : p.chats) {
      ++presence.chat_count;
      bool any = false;
      for (const UrlRecord& u : chat.urls) {
        ++total;
        if (u.cc_tld) {
          ++counts[*u.cc_tld];
          any = true;
        }
      }
      if (any) ++presence.chats_with_cctld;
    }
  }
  if (total == 0) throw Error(ErrorCode::kNoUrls, "dataset contains no links");
  presence.cctlds = ToRows(counts, total);
  presence.percent_of_chats =
      100.0 * static_cast<double>(presence.chats_with_cctld) / static_cast<double>(presence.chat_count);
  return presence;
}

MembersDistribution MembersDistributionOf(const Dataset& dataset) {
  MembersDistribution dist;
  std::vector<double> members;
  for (const Participant& p : dataset.participants) {
    for (const ExtractedChat& chat : p.chats) {
      dist.rows.push_back(MembersRow{p.id, chat.chat_label, chat.num_users});
      members.push_back(static_cast<double>(chat.num_users));
    }
  }
  if (members.empty()) throw Error(ErrorCode::kEmptyInput, "dataset contains no chats");
  dist.median = Median(std::move(members));
  return dist;
}

}  // namespace ucds
