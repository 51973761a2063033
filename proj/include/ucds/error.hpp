#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ucds {

enum class ErrorCode {
  kEmptyExport,
  kUnrecognizedFormat,
  kNoUserMessages,
  kInvalidDate,
  kOversizedExport,
  kUnparseableUrl,
  kRedirectLoop,
  kResolutionFailed,
  kUnknownChat,
  kIndexOutOfRange,
  kAlreadySubmitted,
  kTargetUnreachable,
  kNoTargets,
  kEmptyInput,
  kNoUrls,
  kInvalidPayload,
  kIo,
};

// Stable identifier used in CLI output and HTTP error bodies.
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ucds
