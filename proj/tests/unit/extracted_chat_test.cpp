#include <gtest/gtest.h>

#include <set>

#include "ucds/error.hpp"
#include "ucds/extracted_chat.hpp"

namespace ucds {
namespace {

using namespace std::chrono;

// User0: seq 0 text, seq 1 with two links. User1: seq 2 with one link.
ExtractedChat Fixture() {
  ExtractedChat c;
  c.chat_id = "bcdfghjklmnpqrstvwxzbcdf";
  c.chat_label = "A";
  const Date d1 = year{2021} / 5 / 1;
  const Date d2 = year{2021} / 5 / 3;
  c.start_date = d1;
  c.end_date = d2;
  c.num_users = 2;
  c.messages = {{0, d1, 0, MessageType::kText}, {1, d1, 0, MessageType::kUrl}, {2, d2, 1, MessageType::kUrl}};
  c.per_user = {{0, 2, 1, 1}, {1, 1, 1, 0}};
  c.daily_counts = {{d1, 0, 2}, {d2, 1, 1}};
  c.urls = {{1, "youtube.com", std::nullopt, false, 0, d1},
            {1, "zoom.us", ".us", false, 0, d1},
            {2, "lemonde.fr", ".fr", true, 1, d2}};
  return c;
}

TEST(ExtractedChat, FixtureIsValid) { EXPECT_TRUE(CheckInvariants(Fixture()).empty()); }

TEST(DeleteUrl, OnlyUrlOfMessageBecomesText) {
  ExtractedChat c = Fixture();
  DeleteUrl(c, 2);
  EXPECT_EQ(c.messages[2].kind, MessageType::kText);
  EXPECT_EQ(c.per_user[1], (UserTally{1, 1, 0, 1}));
  EXPECT_TRUE(c.edited);
  EXPECT_EQ(c.urls.size(), 2u);
  EXPECT_TRUE(CheckInvariants(c).empty());
}

TEST(DeleteUrl, OneOfTwoKeepsUrlKind) {
  ExtractedChat c = Fixture();
  DeleteUrl(c, 0);
  EXPECT_EQ(c.messages[1].kind, MessageType::kUrl);
  EXPECT_EQ(c.per_user[0], (UserTally{0, 2, 1, 1}));
  EXPECT_EQ(c.urls[0].domain, "zoom.us");
  DeleteUrl(c, 0);
  EXPECT_EQ(c.messages[1].kind, MessageType::kText);
  EXPECT_EQ(c.per_user[0], (UserTally{0, 2, 0, 2}));
  EXPECT_TRUE(CheckInvariants(c).empty());
}

TEST(DeleteUrl, OutOfRange) {
  ExtractedChat c = Fixture();
  try {
    DeleteUrl(c, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
  EXPECT_FALSE(c.edited);
  EXPECT_EQ(c, Fixture());
}

TEST(CheckInvariants, DetectsBrokenTallies) {
  ExtractedChat c = Fixture();
  c.per_user[0].url_messages = 2;
  EXPECT_FALSE(CheckInvariants(c).empty());
  c = Fixture();
  c.daily_counts.pop_back();
  EXPECT_FALSE(CheckInvariants(c).empty());
  c = Fixture();
  c.urls[0].message_seq = 0;
  EXPECT_FALSE(CheckInvariants(c).empty());
  c = Fixture();
  c.start_date = year{2021} / 4 / 1;
  EXPECT_FALSE(CheckInvariants(c).empty());
}

TEST(ChatDuration, DaysOverAverageMonth) {
  ExtractedChat c = Fixture();
  c.start_date = year{2019} / 1 / 1;
  c.end_date = c.start_date;
  EXPECT_EQ(ChatDurationMonths(c), 0.0);

  c.end_date = Date{sys_days{c.start_date} + days{627}};
  EXPECT_DOUBLE_EQ(ChatDurationMonths(c), 627 / 30.44);
  EXPECT_EQ(RoundToTenth(ChatDurationMonths(c)), 20.6);

  c.end_date = Date{sys_days{c.start_date} + days{37}};
  EXPECT_EQ(RoundToTenth(ChatDurationMonths(c)), 1.2);
}

TEST(ChatId, ConsonantsOnlyAndDistinct) {
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) {
    const std::string id = NewChatId();
    ASSERT_EQ(id.size(), 24u);
    ASSERT_EQ(id.find_first_not_of("bcdfghjklmnpqrstvwxz"), std::string::npos) << id;
    seen.insert(id);
  }
  EXPECT_EQ(seen.size(), 200u);
}

}  // namespace
}  // namespace ucds
