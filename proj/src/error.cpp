#include "ucds/error.hpp"

namespace ucds {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyExport: return "EmptyExport";
    case ErrorCode::kUnrecognizedFormat: return "UnrecognizedFormat";
    case ErrorCode::kNoUserMessages: return "NoUserMessages";
    case ErrorCode::kInvalidDate: return "InvalidDate";
    case ErrorCode::kOversizedExport: return "OversizedExport";
    case ErrorCode::kUnparseableUrl: return "UnparseableUrl";
    case ErrorCode::kRedirectLoop: return "RedirectLoop";
    case ErrorCode::kResolutionFailed: return "ResolutionFailed";
    case ErrorCode::kUnknownChat: return "UnknownChat";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kAlreadySubmitted: return "AlreadySubmitted";
    case ErrorCode::kTargetUnreachable: return "TargetUnreachable";
    case ErrorCode::kNoTargets: return "NoTargets";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNoUrls: return "NoUrls";
    case ErrorCode::kInvalidPayload: return "InvalidPayload";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace ucds
