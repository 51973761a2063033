#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ucds/extracted_chat.hpp"

namespace ucds {

inline constexpr int kSchemaVersion = 1;

// Payload JSON with fields in schema order. Aliases serialize as "User<N>".
nlohmann::ordered_json PayloadJson(const ExtractedChat& chat);

// The exact bytes that are previewed and submitted.
std::string SerializePayload(const ExtractedChat& chat);

// Parses and validates a payload (shape, schema_version, invariants).
// Throws Error(kInvalidPayload).
ExtractedChat ParsePayload(std::string_view bytes);

}  // namespace ucds
