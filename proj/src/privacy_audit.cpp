#include "ucds/privacy_audit.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

namespace ucds {
namespace {

const std::set<std::string>& SchemaVocabulary() {
  static const std::set<std::string> words{
      "schema_version", "chat_id", "chat_label",    "edited",        "start_date",
      "end_date",       "num_users", "per_user",    "alias",         "total_messages",
      "url_messages",   "text_messages", "daily_counts", "date",     "count",
      "messages",       "seq",       "kind",          "urls",        "domain",
      "cc_tld",         "was_shortened", "true",      "false",       "null",
      "text",           "url"};
  return words;
}

std::vector<std::string> Matches(const std::string& text, const std::regex& pattern) {
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pattern); it != std::sregex_iterator();
       ++it) {
    out.push_back(it->str());
  }
  return out;
}

}  // namespace

PrivacyFindings AuditPayload(std::string_view payload, const PrivacyAuditInput& input) {
  PrivacyFindings findings;
  const std::string text(payload);

  for (const std::string& name : input.sender_names) {
    if (!name.empty() && text.find(name) != std::string::npos) findings.leaked_names.push_back(name);
  }

  std::set<std::string> allowed(input.allowed_tokens.begin(), input.allowed_tokens.end());
  std::set<std::string> checked;
  for (const std::string& body : input.bodies) {
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      std::size_t j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
      std::string token = body.substr(i, j - i);
      i = j;
      if (token.size() < input.min_fragment_length || allowed.count(token) > 0 ||
          SchemaVocabulary().count(token) > 0 || !checked.insert(token).second) {
        continue;
      }
      if (text.find(token) != std::string::npos) findings.leaked_fragments.push_back(token);
    }
  }

  static const std::regex iso_date(R"("\d{4}-\d{2}-\d{2}")");
  static const std::regex phone(R"(\+?\d(?:[ .()\-]?\d){6,})");
  static const std::regex clock(R"(\b\d{1,2}:\d{2}(?::\d{2})?\b)");
  const std::string masked = std::regex_replace(text, iso_date, "\"DATE\"");
  findings.phone_numbers = Matches(masked, phone);
  findings.clock_times = Matches(masked, clock);
  return findings;
}

}  // namespace ucds
