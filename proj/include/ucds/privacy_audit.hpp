#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ucds {

struct PrivacyFindings {
  std::vector<std::string> leaked_names;
  std::vector<std::string> leaked_fragments;
  std::vector<std::string> phone_numbers;
  std::vector<std::string> clock_times;

  bool clean() const {
    return leaked_names.empty() && leaked_fragments.empty() && phone_numbers.empty() &&
           clock_times.empty();
  }
};

struct PrivacyAuditInput {
  std::vector<std::string> sender_names;
  std::vector<std::string> bodies;
  // Body tokens that may legitimately appear (the reduced domains).
  std::vector<std::string> allowed_tokens;
  std::size_t min_fragment_length = 4;
};

// Scans serialized output for sender names, message-body tokens, phone-number
// shaped digit runs (7+ digits with optional separators, ISO dates exempt)
// and clock times.
PrivacyFindings AuditPayload(std::string_view payload, const PrivacyAuditInput& input);

}  // namespace ucds
