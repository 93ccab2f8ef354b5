#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace absa::util {

// Decodes UTF-8 into code points. Malformed byte sequences decode to U+FFFD
// so the text pipeline stays total on arbitrary input.
std::vector<char32_t> utf8_decode(std::string_view s);

void utf8_append(std::string& out, char32_t cp);
std::string utf8_encode(const std::vector<char32_t>& cps);

}  // namespace absa::util
