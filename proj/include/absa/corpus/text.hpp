#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace absa::corpus {

// Persian-script unification: Arabic Yeh/Kaf to their Persian forms,
// Persian/Arabic digits to ASCII, ZWNJ to space, control characters
// stripped, whitespace runs collapsed, result trimmed. Idempotent.
std::string normalize_text(std::string_view raw);

// Splits normalized text on spaces and detaches punctuation
// (. ! ? , ; question/comma/semicolon in Arabic script, quotes,
// guillemets, parentheses) into separate tokens.
std::vector<std::string> tokenize(std::string_view normalized);

}  // namespace absa::corpus
