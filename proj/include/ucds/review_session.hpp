#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ucds/export_parser.hpp"
#include "ucds/extracted_chat.hpp"
#include "ucds/session_store.hpp"
#include "ucds/submission.hpp"
#include "ucds/url_pipeline.hpp"

namespace ucds {

struct ChatSummary {
  std::string chat_id;
  std::string chat_label;
  std::size_t num_users = 0;
  std::size_t message_count = 0;
  std::size_t url_count = 0;
  Date start_date;
  Date end_date;
  bool edited = false;
  ChatState state = ChatState::kImported;
};

struct ReviewOptions {
  ParserOptions parser;
  std::uintmax_t max_export_bytes = 50ull * 1024 * 1024;
  // Used by Submit when the caller names no targets.
  std::vector<SubmissionTarget> default_targets;
  DeliveryOptions delivery;
};

// One participant's chats between import and submission. Raw exports and
// alias tables exist only inside Import* calls. Mutations are serialized by
// a single writer lock; reads may run concurrently.
class ReviewSession {
 public:
  explicit ReviewSession(UrlPipeline pipeline, ReviewOptions options = {},
                         std::optional<SessionStore> store = std::nullopt);

  // Parse, anonymize and extract; returns the new chat_id. Parser errors and
  // Error(kOversizedExport) propagate with the session unchanged.
  std::string ImportFile(const std::filesystem::path& path);
  std::string ImportRaw(const RawExport& raw);

  std::vector<ChatSummary> ListChats() const;
  ExtractedChat GetChat(const std::string& chat_id) const;
  ChatState StateOf(const std::string& chat_id) const;

  // Exact payload bytes that Submit would send; marks the chat reviewed.
  std::string Preview(const std::string& chat_id);

  // Throws Error with kUnknownChat, kIndexOutOfRange or kAlreadySubmitted.
  ExtractedChat DeleteUrl(const std::string& chat_id, std::size_t url_index);

  // Delivers the current payload to `targets` (or the defaults). On any
  // delivery failure the chat is left reviewed and Error(kTargetUnreachable)
  // is thrown.
  SubmissionReceipt Submit(const std::string& chat_id,
                           const std::vector<SubmissionTarget>& targets = {});

  const ReviewOptions& options() const { return options_; }

 private:
  StoredChat& Find(const std::string& chat_id);
  const StoredChat& Find(const std::string& chat_id) const;
  void Persist() const;

  UrlPipeline pipeline_;
  ReviewOptions options_;
  std::optional<SessionStore> store_;
  mutable std::shared_mutex mutex_;
  std::vector<StoredChat> chats_;
};

}  // namespace ucds
