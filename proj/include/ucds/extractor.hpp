#pragma once

#include <string>

#include "ucds/anonymizer.hpp"
#include "ucds/extracted_chat.hpp"
#include "ucds/url_pipeline.hpp"

namespace ucds {

struct ExtractionResult {
  ExtractedChat chat;
  UrlDiagnostics diagnostics;
};

// Builds the constrained metadata bundle. A message is kind=url when its
// body contains at least one link; each link occurrence yields one record
// unless its host cannot be reduced. Bodies are not retained. Throws
// Error(kNoUserMessages).
ExtractionResult Extract(const AnonChatLog& log, const UrlPipeline& pipeline,
                         std::string chat_label = "A");

}  // namespace ucds
