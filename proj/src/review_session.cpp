#include "ucds/review_session.hpp"

#include <algorithm>
#include <mutex>

#include "ucds/anonymizer.hpp"
#include "ucds/error.hpp"
#include "ucds/extractor.hpp"
#include "ucds/payload.hpp"

namespace ucds {

ReviewSession::ReviewSession(UrlPipeline pipeline, ReviewOptions options,
                             std::optional<SessionStore> store)
    : pipeline_(std::move(pipeline)), options_(std::move(options)), store_(std::move(store)) {
  if (store_) chats_ = store_->Load();
}

std::string ReviewSession::ImportFile(const std::filesystem::path& path) {
  return ImportRaw(LoadExport(path, options_.max_export_bytes));
}

std::string ReviewSession::ImportRaw(const RawExport& raw) {
  if (raw.content.size() > options_.max_export_bytes) {
    throw Error(ErrorCode::kOversizedExport, "export exceeds " +
                                                 std::to_string(options_.max_export_bytes) +
                                                 " bytes");
  }
  // The raw log and alias table go out of scope at the end of this block.
  ExtractedChat chat = [&] {
    const ChatLog log = ParseExport(raw, options_.parser);
    const Anonymized anon = Anonymize(log);
    return Extract(anon.log, pipeline_).chat;
  }();

  std::unique_lock lock(mutex_);
  chat.chat_label = ChatLabel(chats_.size());
  std::string id = chat.chat_id;
  chats_.push_back(StoredChat{std::move(chat), ChatState::kImported});
  try {
    Persist();
  } catch (...) {
    chats_.pop_back();
    throw;
  }
  return id;
}

std::vector<ChatSummary> ReviewSession::ListChats() const {
  std::shared_lock lock(mutex_);
  std::vector<ChatSummary> out;
  out.reserve(chats_.size());
  for (const StoredChat& s : chats_) {
    const ExtractedChat& c = s.chat;
    out.push_back(ChatSummary{c.chat_id, c.chat_label, c.num_users, c.messages.size(), c.urls.size(),
                              c.start_date, c.end_date, c.edited, s.state});
  }
  return out;
}

ExtractedChat ReviewSession::GetChat(const std::string& chat_id) const {
  std::shared_lock lock(mutex_);
  return Find(chat_id).chat;
}

ChatState ReviewSession::StateOf(const std::string& chat_id) const {
  std::shared_lock lock(mutex_);
  return Find(chat_id).state;
}

std::string ReviewSession::Preview(const std::string& chat_id) {
  std::unique_lock lock(mutex_);
  StoredChat& stored = Find(chat_id);
  if (stored.state == ChatState::kImported) {
    stored.state = ChatState::kReviewed;
    Persist();
  }
  return SerializePayload(stored.chat);
}

ExtractedChat ReviewSession::DeleteUrl(const std::string& chat_id, std::size_t url_index) {
  std::unique_lock lock(mutex_);
  StoredChat& stored = Find(chat_id);
  if (stored.state == ChatState::kSubmitted) {
    throw Error(ErrorCode::kAlreadySubmitted, "chat " + chat_id + " was already submitted");
  }
  const StoredChat before = stored;
  ucds::DeleteUrl(stored.chat, url_index);
  stored.state = ChatState::kReviewed;
  try {
    Persist();
  } catch (...) {
    stored = before;
    throw;
  }
  return stored.chat;
}

SubmissionReceipt ReviewSession::Submit(const std::string& chat_id,
                                        const std::vector<SubmissionTarget>& targets) {
  std::unique_lock lock(mutex_);
  StoredChat& stored = Find(chat_id);
  if (stored.state == ChatState::kSubmitted) {
    throw Error(ErrorCode::kAlreadySubmitted, "chat " + chat_id + " was already submitted");
  }
  const std::vector<SubmissionTarget>& chosen = targets.empty() ? options_.default_targets : targets;
  if (chosen.empty()) throw Error(ErrorCode::kNoTargets, "no submission target selected");

  const std::string payload = SerializePayload(stored.chat);
  SubmissionReceipt receipt{stored.chat.chat_id, stored.chat.chat_label, payload.size(), {}};
  std::vector<std::string> failures;
  for (const SubmissionTarget& target : chosen) {
    try {
      receipt.delivered_to.push_back(Deliver(target, stored.chat.chat_id, payload, options_.delivery));
    } catch (const Error& e) {
      failures.push_back(e.what());
    }
  }
  if (!failures.empty()) {
    stored.state = ChatState::kReviewed;
    Persist();
    std::string message = "submission failed:";
    for (const std::string& f : failures) message += " " + f + ";";
    throw Error(ErrorCode::kTargetUnreachable, message);
  }
  stored.state = ChatState::kSubmitted;
  Persist();
  return receipt;
}

StoredChat& ReviewSession::Find(const std::string& chat_id) {
  auto it = std::find_if(chats_.begin(), chats_.end(),
                         [&](const StoredChat& s) { return s.chat.chat_id == chat_id; });
  if (it == chats_.end()) throw Error(ErrorCode::kUnknownChat, "unknown chat " + chat_id);
  return *it;
}

const StoredChat& ReviewSession::Find(const std::string& chat_id) const {
  return const_cast<ReviewSession*>(this)->Find(chat_id);
}

void ReviewSession::Persist() const {
  if (store_) store_->Save(chats_);
}

}  // namespace ucds
