#include "ucds/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ucds/error.hpp"

namespace ucds {
namespace {

using nlohmann::ordered_json;

std::string Fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string Pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

// Renders rows with the first column left-aligned and the rest right-aligned.
void Table(std::ostringstream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += Pad(row[c], widths[c], c > 0);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

template <typename Fn>
std::optional<double> Try(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmptyInput || e.code() == ErrorCode::kNoUrls) return std::nullopt;
    throw;
  }
}

std::string OrNa(const std::optional<double>& v, int decimals, const std::string& suffix = "") {
  return v ? Fixed(*v, decimals) + suffix : "n/a";
}

std::size_t UrlMessages(const ExtractedChat& chat) {
  return static_cast<std::size_t>(std::count_if(chat.messages.begin(), chat.messages.end(), [](const MessageMeta& m) {
    return m.kind == MessageType::kUrl;
  }));
}

void FrequencySection(std::ostringstream& out, const std::string& title, const std::string& header,
                      const std::vector<FrequencyRow>& rows) {
  out << title << '\n';
  if (rows.empty()) {
    out << "n/a\n\n";
    return;
  }
  std::vector<std::vector<std::string>> table{{header, "Count", "Share (%)"}};
  for (const FrequencyRow& r : rows) table.push_back({r.key, std::to_string(r.count), Fixed(r.percent, 1)});
  Table(out, table);
  out << '\n';
}

ordered_json FrequencyJson(const std::vector<FrequencyRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const FrequencyRow& r : rows) {
    ordered_json row;
    row["key"] = r.key;
    row["count"] = r.count;
    row["percent"] = r.percent;
    arr.push_back(std::move(row));
  }
  return arr;
}

ordered_json OptionalJson(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

}  // namespace

DatasetReport BuildReport(const Dataset& dataset) {
  DatasetReport report;
  for (const Participant& p : dataset.participants) {
    ParticipantRow row;
    row.participant_id = p.id;
    row.chats = p.chats.size();
    std::vector<double> months;
    for (const ExtractedChat& chat : p.chats) {
      row.urls += UrlMessages(chat);
      months.push_back(ChatDurationMonths(chat));
      if (chat.edited) ++row.edited_chats;

      const std::size_t url_messages = UrlMessages(chat);
      report.totals.url_messages += url_messages;
      report.totals.text_messages += chat.messages.size() - url_messages;
      report.totals.total_messages += chat.messages.size();
      report.totals.link_records += chat.urls.size();
    }
    if (!months.empty()) row.median_chat_months = Median(months);
    report.chat_count += row.chats;
    report.edited_chats += row.edited_chats;
    if (row.edited_chats > 0) ++report.participants_editing;
    report.participants.push_back(std::move(row));
  }

  if (!report.participants.empty()) {
    std::vector<double> chats, urls, months;
    for (const ParticipantRow& r : report.participants) {
      chats.push_back(static_cast<double>(r.chats));
      urls.push_back(static_cast<double>(r.urls));
      months.push_back(r.median_chat_months);
    }
    report.participant_medians = ParticipantMedians{Median(chats), Median(urls), Median(months)};
  }

  if (report.totals.total_messages > 0) {
    report.url_message_pct_flat = 100.0 * static_cast<double>(report.totals.url_messages) /
                                  static_cast<double>(report.totals.total_messages);
  }
  report.url_message_pct_median_of_medians = Try([&] {
    return MedianOfMedians(dataset, [](const ExtractedChat& c) -> std::optional<double> {
      if (c.messages.empty()) return std::nullopt;
      return PctUrlMessages(c);
    });
  });

  const ChatMetric top_sharer = [](const ExtractedChat& c) -> std::optional<double> {
    if (c.urls.empty()) return std::nullopt;
    return TopSharerShare(c);
  };
  report.top_sharer_share_median_of_medians = Try([&] { return MedianOfMedians(dataset, top_sharer); });
  {
    double sum = 0.0;
    std::size_t n = 0;
    for (const Participant& p : dataset.participants) {
      for (const ExtractedChat& c : p.chats) {
        if (auto v = top_sharer(c)) {
          sum += *v;
          ++n;
        }
      }
    }
    if (n > 0) report.top_sharer_share_mean = sum / static_cast<double>(n);
  }
  report.domain_shares_median_of_medians = Try([&] {
    return MedianOfMedians(dataset, [](const ExtractedChat& c) -> std::optional<double> {
      if (c.urls.empty()) return std::nullopt;
      return MedianDomainShares(c);
    });
  });

  if (report.totals.link_records > 0) {
    report.domains = DomainFrequency(dataset);
    report.tlds = TldFrequency(dataset);
    report.cctld = CcTldPresenceOf(dataset);
  }
  if (report.chat_count > 0) report.members = MembersDistributionOf(dataset);
  return report;
}

std::string RenderText(const DatasetReport& report) {
  std::ostringstream out;

  out << "Participants\n";
  if (report.participants.empty()) {
    out << "n/a\n";
  } else {
    std::vector<std::vector<std::string>> table{{"Participant", "# Chats", "# URLs in Chats", "Median Chat Len. (months)"}};
    for (const ParticipantRow& r : report.participants) {
      table.push_back({r.participant_id, std::to_string(r.chats), std::to_string(r.urls),
                       Fixed(r.median_chat_months, 1)});
    }
    const ParticipantMedians& m = *report.participant_medians;
    table.push_back({"Median", Fixed(m.chats, 1), Fixed(m.urls, 1), Fixed(m.median_chat_months, 1)});
    Table(out, table);
  }
  out << '\n';

  out << "Messages\n";
  Table(out, {{"# URLs", std::to_string(report.totals.url_messages)},
              {"# Texts", std::to_string(report.totals.text_messages)},
              {"Total Messages", std::to_string(report.totals.total_messages)},
              {"Link records", std::to_string(report.totals.link_records)}});
  out << '\n';

  out << "URL exposure\n";
  Table(out, {{"URL messages, flat share of all messages (%)", OrNa(report.url_message_pct_flat, 2)},
              {"URL messages, median of participant medians (%)",
               OrNa(report.url_message_pct_median_of_medians, 2)},
              {"Top sharer share of a chat's links, mean over chats (%)",
               report.top_sharer_share_mean ? Fixed(100.0 * *report.top_sharer_share_mean, 1) : "n/a"},
              {"Top sharer share of a chat's links, median of participant medians (%)",
               report.top_sharer_share_median_of_medians
                   ? Fixed(100.0 * *report.top_sharer_share_median_of_medians, 1)
                   : "n/a"},
              {"Times a domain was shared in a chat, median of participant medians",
               OrNa(report.domain_shares_median_of_medians, 1)}});
  out << '\n';

  FrequencySection(out, "Top domains", "Domain", report.domains);
  FrequencySection(out, "Top TLDs", "TLD", report.tlds);
  FrequencySection(out, "ccTLDs", "ccTLD", report.cctld ? report.cctld->cctlds : std::vector<FrequencyRow>{});
  out << "Chats with ccTLD links: ";
  if (report.cctld) {
    out << report.cctld->chats_with_cctld << " of " << report.cctld->chat_count << " ("
        << Fixed(report.cctld->percent_of_chats, 1) << "%)\n";
  } else {
    out << "n/a\n";
  }
  out << '\n';

  out << "Chat members\n";
  if (!report.members) {
    out << "n/a\n";
  } else {
    std::vector<std::vector<std::string>> table{{"Participant ID", "Chat ID", "# Members"}};
    for (const MembersRow& r : report.members->rows) {
      table.push_back({r.participant_id, r.chat_label, std::to_string(r.members)});
    }
    table.push_back({"median:", "", Fixed(report.members->median, 1)});
    Table(out, table);
  }
  out << '\n';

  out << "Edited chats: " << report.edited_chats << " of " << report.chat_count
      << " (participants editing: " << report.participants_editing << ")\n";
  return out.str();
}

ordered_json RenderJson(const DatasetReport& report) {
  ordered_json j;
  j["participants"] = ordered_json::array();
  for (const ParticipantRow& r : report.participants) {
    ordered_json row;
    row["participant_id"] = r.participant_id;
    row["chats"] = r.chats;
    row["urls"] = r.urls;
    row["median_chat_months"] = r.median_chat_months;
    row["edited_chats"] = r.edited_chats;
    j["participants"].push_back(std::move(row));
  }
  if (report.participant_medians) {
    j["participant_medians"] = {{"chats", report.participant_medians->chats},
                                {"urls", report.participant_medians->urls},
                                {"median_chat_months", report.participant_medians->median_chat_months}};
  } else {
    j["participant_medians"] = nullptr;
  }
  j["chat_count"] = report.chat_count;
  j["edited_chats"] = report.edited_chats;
  j["participants_editing"] = report.participants_editing;
  j["totals"] = {{"url_messages", report.totals.url_messages},
                 {"text_messages", report.totals.text_messages},
                 {"total_messages", report.totals.total_messages},
                 {"link_records", report.totals.link_records}};
  j["url_message_pct"] = {{"flat", OptionalJson(report.url_message_pct_flat)},
                          {"median_of_medians", OptionalJson(report.url_message_pct_median_of_medians)}};
  j["top_sharer_share"] = {{"mean_over_chats", OptionalJson(report.top_sharer_share_mean)},
                           {"median_of_medians", OptionalJson(report.top_sharer_share_median_of_medians)}};
  j["domain_shares_per_chat_median_of_medians"] = OptionalJson(report.domain_shares_median_of_medians);
  j["domains"] = FrequencyJson(report.domains);
  j["tlds"] = FrequencyJson(report.tlds);
  if (report.cctld) {
    j["cctlds"] = FrequencyJson(report.cctld->cctlds);
    j["cctld_presence"] = {{"chats_with_cctld", report.cctld->chats_with_cctld},
                           {"chat_count", report.cctld->chat_count},
                           {"percent_of_chats", report.cctld->percent_of_chats}};
  } else {
    j["cctlds"] = ordered_json::array();
    j["cctld_presence"] = nullptr;
  }
  if (report.members) {
    ordered_json rows = ordered_json::array();
    for (const MembersRow& r : report.members->rows) {
      rows.push_back({{"participant_id", r.participant_id}, {"chat_label", r.chat_label}, {"members", r.members}});
    }
    j["members"] = {{"rows", rows}, {"median", report.members->median}};
  } else {
    j["members"] = nullptr;
  }
  return j;
}

}  // namespace ucds
