#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ucds/dataset.hpp"

namespace ucds {

// Middle value; the mean of the two middle values for even sizes. Throws
// Error(kEmptyInput).
double Median(std::vector<double> values);

// A per-chat metric; nullopt marks the chat as not contributing (e.g. a
// link-based metric on a chat without links).
using ChatMetric = std::function<std::optional<double>(const ExtractedChat&)>;

// Median over participants of each participant's median over chats.
// Participants with no contributing chat are left out. Throws
// Error(kEmptyInput) when nothing contributes.
double MedianOfMedians(const Dataset& dataset, const ChatMetric& metric);

// 100 * url messages / messages. Throws Error(kEmptyInput).
double PctUrlMessages(const ExtractedChat& chat);

// Largest share of the chat's links sent by one alias, in (0, 1]. Throws
// Error(kNoUrls).
double TopSharerShare(const ExtractedChat& chat);

// Median number of times each distinct domain was shared. Throws
// Error(kNoUrls).
double MedianDomainShares(const ExtractedChat& chat);

struct FrequencyRow {
  std::string key;
  std::size_t count = 0;
  double percent = 0.0;
};

// Shares of all link records, sorted by count descending then key.
// Throw Error(kNoUrls) on a dataset without links.
std::vector<FrequencyRow> DomainFrequency(const Dataset& dataset);
std::vector<FrequencyRow> TldFrequency(const Dataset& dataset);

struct CcTldPresence {
  std::vector<FrequencyRow> cctlds;
  std::size_t chats_with_cctld = 0;
  std::size_t chat_count = 0;
  double percent_of_chats = 0.0;
};

CcTldPresence CcTldPresenceOf(const Dataset& dataset);

struct MembersRow {
  std::string participant_id;
  std::string chat_label;
  std::size_t members = 0;
};

struct MembersDistribution {
  std::vector<MembersRow> rows;
  double median = 0.0;
};

// Throws Error(kEmptyInput) for a dataset without chats.
MembersDistribution MembersDistributionOf(const Dataset& dataset);

}  // namespace ucds
