#include "absa/corpus/text.hpp"

#include "absa/util/utf8.hpp"

namespace absa::corpus {

namespace {

constexpr char32_t kArabicYeh = 0x064A;
constexpr char32_t kFarsiYeh = 0x06CC;
constexpr char32_t kArabicKaf = 0x0643;
constexpr char32_t kKeheh = 0x06A9;
constexpr char32_t kZwnj = 0x200C;

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v';
}

bool is_control(char32_t cp) {
  return cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F);
}

// Returns the replacement code point, U' ' for whitespace-like input,
// or 0 when the character is dropped.
char32_t map_char(char32_t cp) {
  if (cp == kArabicYeh) return kFarsiYeh;
  if (cp == kArabicKaf) return kKeheh;
  if (cp >= 0x0660 && cp <= 0x0669) return U'0' + (cp - 0x0660);  // Arabic-Indic
  if (cp >= 0x06F0 && cp <= 0x06F9) return U'0' + (cp - 0x06F0);  // Extended (Persian)
  if (cp == kZwnj) return U' ';
  if (is_space(cp)) return U' ';
  if (is_control(cp)) return 0;
  return cp;
}

bool is_detached_punct(char32_t cp) {
  switch (cp) {
    case U'.':
    case U'!':
    case U'?':
    case 0x060C:  // ، Arabic comma
    case 0x061B:  // ؛ Arabic semicolon
    case 0x061F:  // ؟ Arabic question mark
    case U'"':
    case U'\'':
    case 0x00AB:  // «
    case 0x00BB:  // »
    case U'(':
    case U')':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string normalize_text(std::string_view raw) {
  const std::vector<char32_t> cps = util::utf8_decode(raw);
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  bool seen_any = false;
  for (char32_t cp : cps) {
    const char32_t mapped = map_char(cp);
    if (mapped == 0) continue;
    if (mapped == U' ') {
      pending_space = seen_any;  // leading spaces trim away
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    util::utf8_append(out, mapped);
    seen_any = true;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view normalized) {
  const std::vector<char32_t> cps = util::utf8_decode(normalized);
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  };
  for (char32_t cp : cps) {
    if (cp == U' ') {
      flush();
    } else if (is_detached_punct(cp)) {
      flush();
      std::string punct;
      util::utf8_append(punct, cp);
      tokens.push_back(std::move(punct));
    } else {
      util::utf8_append(current, cp);
    }
  }
  flush();
  return tokens;
}

}  // namespace absa::corpus
