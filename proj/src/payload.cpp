#include "ucds/payload.hpp"

#include <charconv>

#include "ucds/anonymizer.hpp"
#include "ucds/error.hpp"

namespace ucds {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void Invalid(const std::string& why) {
  throw Error(ErrorCode::kInvalidPayload, "invalid payload: " + why);
}

std::size_t ParseAlias(const ordered_json& value) {
  if (!value.is_string()) Invalid("alias must be a string");
  const std::string& text = value.get_ref<const std::string&>();
  if (text.size() <= 4 || text.compare(0, 4, "User") != 0) Invalid("bad alias " + text);
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 4, text.data() + text.size(), index);
  if (ec != std::errc() || ptr != text.data() + text.size() || UserLabel(index) != text) {
    Invalid("bad alias " + text);
  }
  return index;
}

Date ParseDate(const ordered_json& value) {
  if (!value.is_string()) Invalid("date must be a string");
  auto date = ParseIsoDate(value.get_ref<const std::string&>());
  if (!date) Invalid("bad date " + value.get<std::string>());
  return *date;
}

std::size_t Count(const ordered_json& obj, const char* key) {
  const auto& value = obj.at(key);
  if (!value.is_number_unsigned()) Invalid(std::string(key) + " must be a non-negative integer");
  return value.get<std::size_t>();
}

}  // namespace

ordered_json PayloadJson(const ExtractedChat& chat) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["chat_id"] = chat.chat_id;
  j["chat_label"] = chat.chat_label;
  j["edited"] = chat.edited;
  j["start_date"] = FormatIsoDate(chat.start_date);
  j["end_date"] = FormatIsoDate(chat.end_date);
  j["num_users"] = chat.num_users;

  j["per_user"] = ordered_json::array();
  for (const UserTally& t : chat.per_user) {
    ordered_json row;
    row["alias"] = UserLabel(t.alias);
    row["total_messages"] = t.total_messages;
    row["url_messages"] = t.url_messages;
    row["text_messages"] = t.text_messages;
    j["per_user"].push_back(std::move(row));
  }
  j["daily_counts"] = ordered_json::array();
  for (const DailyCount& d : chat.daily_counts) {
    ordered_json row;
    row["date"] = FormatIsoDate(d.date);
    row["alias"] = UserLabel(d.alias);
    row["count"] = d.count;
    j["daily_counts"].push_back(std::move(row));
  }
  j["messages"] = ordered_json::array();
  for (const MessageMeta& m : chat.messages) {
    ordered_json row;
    row["seq"] = m.seq;
    row["date"] = FormatIsoDate(m.date);
    row["alias"] = UserLabel(m.alias);
    row["kind"] = m.kind == MessageType::kUrl ? "url" : "text";
    j["messages"].push_back(std::move(row));
  }
  j["urls"] = ordered_json::array();
  for (const UrlRecord& u : chat.urls) {
    ordered_json row;
    row["seq"] = u.message_seq;
    row["domain"] = u.domain;
    row["cc_tld"] = u.cc_tld ? ordered_json(*u.cc_tld) : ordered_json(nullptr);
    row["was_shortened"] = u.was_shortened;
    row["alias"] = UserLabel(u.alias);
    row["date"] = FormatIsoDate(u.date);
    j["urls"].push_back(std::move(row));
  }
  return j;
}

std::string SerializePayload(const ExtractedChat& chat) { return PayloadJson(chat).dump(2) + "\n"; }

ExtractedChat ParsePayload(std::string_view bytes) {
  ordered_json j = ordered_json::parse(bytes, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) Invalid("not a JSON object");

  ExtractedChat chat;
  try {
    if (!j.at("schema_version").is_number_integer() ||
        j.at("schema_version").get<int>() != kSchemaVersion) {
      Invalid("unsupported schema_version");
    }
    chat.chat_id = j.at("chat_id").get<std::string>();
    chat.chat_label = j.at("chat_label").get<std::string>();
    chat.edited = j.at("edited").get<bool>();
    chat.start_date = ParseDate(j.at("start_date"));
    chat.end_date = ParseDate(j.at("end_date"));
    chat.num_users = Count(j, "num_users");
    for (const auto& row : j.at("per_user")) {
      chat.per_user.push_back(UserTally{ParseAlias(row.at("alias")), Count(row, "total_messages"),
                                        Count(row, "url_messages"), Count(row, "text_messages")});
    }
    for (const auto& row : j.at("daily_counts")) {
      chat.daily_counts.push_back(
          DailyCount{ParseDate(row.at("date")), ParseAlias(row.at("alias")), Count(row, "count")});
    }
    for (const auto& row : j.at("messages")) {
      const std::string kind = row.at("kind").get<std::string>();
      if (kind != "url" && kind != "text") Invalid("bad message kind " + kind);
      chat.messages.push_back(MessageMeta{Count(row, "seq"), ParseDate(row.at("date")),
                                          ParseAlias(row.at("alias")),
                                          kind == "url" ? MessageType::kUrl : MessageType::kText});
    }
    for (const auto& row : j.at("urls")) {
      UrlRecord u;
      u.message_seq = Count(row, "seq");
      u.domain = row.at("domain").get<std::string>();
      if (!row.at("cc_tld").is_null()) u.cc_tld = row.at("cc_tld").get<std::string>();
      u.was_shortened = row.at("was_shortened").get<bool>();
      u.alias = ParseAlias(row.at("alias"));
      u.date = ParseDate(row.at("date"));
      chat.urls.push_back(std::move(u));
    }
  } catch (const nlohmann::json::exception& e) {
    Invalid(e.what());
  }

  auto problems = CheckInvariants(chat);
  if (!problems.empty()) Invalid(problems.front());
  return chat;
}

}  // namespace ucds
