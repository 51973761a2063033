#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace ucds {

using Date = std::chrono::year_month_day;

// Clock time within a day. Parsed from exports but never serialized.
struct TimeOfDay {
  int hour = 0;
  int minute = 0;
  int second = 0;

  friend auto operator<=>(const TimeOfDay&, const TimeOfDay&) = default;
};

// "YYYY-MM-DD".
std::string FormatIsoDate(const Date& date);
std::optional<Date> ParseIsoDate(std::string_view text);

// Signed number of days from `from` to `to`.
long DaysBetween(const Date& from, const Date& to);

}  // namespace ucds
