#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucds/dataset.hpp"
#include "ucds/stats.hpp"

namespace ucds {

struct ParticipantRow {
  std::string participant_id;
  std::size_t chats = 0;
  std::size_t urls = 0;  // url-kind messages across the participant's chats
  double median_chat_months = 0.0;
  std::size_t edited_chats = 0;
};

// Medians across participant rows; the bottom row of the participants table.
struct ParticipantMedians {
  double chats = 0.0;
  double urls = 0.0;
  double median_chat_months = 0.0;
};

struct MessageTotals {
  std::size_t url_messages = 0;
  std::size_t text_messages = 0;
  std::size_t total_messages = 0;
  std::size_t link_records = 0;
};

struct DatasetReport {
  std::vector<ParticipantRow> participants;
  std::optional<ParticipantMedians> participant_medians;
  std::size_t chat_count = 0;
  std::size_t edited_chats = 0;
  std::size_t participants_editing = 0;
  MessageTotals totals;

  std::optional<double> url_message_pct_flat;
  std::optional<double> url_message_pct_median_of_medians;
  std::optional<double> top_sharer_share_mean;
  std::optional<double> top_sharer_share_median_of_medians;
  std::optional<double> domain_shares_median_of_medians;

  std::vector<FrequencyRow> domains;
  std::vector<FrequencyRow> tlds;
  std::optional<CcTldPresence> cctld;
  std::optional<MembersDistribution> members;
};

DatasetReport BuildReport(const Dataset& dataset);

// Fixed-layout plain-text tables. Sections without data print "n/a".
std::string RenderText(const DatasetReport& report);
nlohmann::ordered_json RenderJson(const DatasetReport& report);

}  // namespace ucds
