#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace ucds {

struct Utf8Result {
  std::string text;
  std::size_t replacements = 0;
};

// Decodes `input` as UTF-8, substituting one U+FFFD for each invalid lead
// byte together with the stray continuation bytes that follow it. Overlong
// forms, surrogates and code points above U+10FFFF count as invalid.
Utf8Result SanitizeUtf8(std::string_view input);

}  // namespace ucds
