#include "ucds/utf8.hpp"

namespace ucds {
namespace {

constexpr std::string_view kReplacement = "\xEF\xBF\xBD";

// Length of the valid sequence starting at `s[i]`, or 0 when invalid.
std::size_t ValidSequenceLength(std::string_view s, std::size_t i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char lead = byte(i);
  if (lead < 0x80) return 1;

  std::size_t len = 0;
  unsigned char lo = 0x80, hi = 0xBF;
  if (lead >= 0xC2 && lead <= 0xDF) {
    len = 2;
  } else if (lead >= 0xE0 && lead <= 0xEF) {
    len = 3;
    if (lead == 0xE0) lo = 0xA0;
    if (lead == 0xED) hi = 0x9F;
  } else if (lead >= 0xF0 && lead <= 0xF4) {
    len = 4;
    if (lead == 0xF0) lo = 0x90;
    if (lead == 0xF4) hi = 0x8F;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  if (byte(i + 1) < lo || byte(i + 1) > hi) return 0;
  for (std::size_t k = 2; k < len; ++k) {
    if (byte(i + k) < 0x80 || byte(i + k) > 0xBF) return 0;
  }
  return len;
}

}  // namespace

Utf8Result SanitizeUtf8(std::string_view input) {
  Utf8Result out;
  out.text.reserve(input.size());
  std::size_t i = 0;
  while (i < input.size()) {
    const std::size_t len = ValidSequenceLength(input, i);
    if (len > 0) {
      out.text.append(input.substr(i, len));
      i += len;
      continue;
    }
    out.text.append(kReplacement);
    ++out.replacements;
    // Skip the lead byte plus any continuation bytes that belong to it.
    ++i;
    while (i < input.size() && (static_cast<unsigned char>(input[i]) & 0xC0) == 0x80 &&
           ValidSequenceLength(input, i) == 0) {
      ++i;
    }
  }
  return out;
}

}  // namespace ucds
