#include "wordrank/unicode.hpp"

#include <cstdint>

namespace wordrank {
namespace {

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

// Blocks where upper case sits on even code points and lower case on the next odd one.
char32_t even_odd_pair(char32_t cp) { return (cp % 2 == 0) ? cp + 1 : cp; }
// Blocks where upper case is odd and lower case the next even.
char32_t odd_even_pair(char32_t cp) { return (cp % 2 == 1) ? cp + 1 : cp; }

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

char32_t lowercase_code_point(char32_t cp) {
  if (cp < 0x80) {
    return in(cp, U'A', U'Z') ? cp + 0x20 : cp;
  }
  // Latin-1 Supplement
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A
  if (cp == 0x130) return U'i';
  if (in(cp, 0x100, 0x137)) return even_odd_pair(cp);
  if (in(cp, 0x139, 0x148)) return odd_even_pair(cp);
  if (in(cp, 0x14A, 0x177)) return even_odd_pair(cp);
  if (cp == 0x178) return 0xFF;
  if (in(cp, 0x179, 0x17E)) return odd_even_pair(cp);
  // Latin Extended-B, the regular runs only
  if (in(cp, 0x1CD, 0x1DC)) return odd_even_pair(cp);
  if (in(cp, 0x1DE, 0x1EF)) return even_odd_pair(cp);
  if (in(cp, 0x1F8, 0x21F)) return even_odd_pair(cp);
  if (in(cp, 0x222, 0x233)) return even_odd_pair(cp);
  // Greek
  if (cp == 0x386) return 0x3AC;
  if (in(cp, 0x388, 0x38A)) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (in(cp, 0x38E, 0x38F)) return cp + 63;
  if (in(cp, 0x391, 0x3AB) && cp != 0x3A2) return cp + 0x20;
  if (in(cp, 0x3D8, 0x3EF)) return even_odd_pair(cp);
  // Cyrillic
  if (in(cp, 0x400, 0x40F)) return cp + 0x50;
  if (in(cp, 0x410, 0x42F)) return cp + 0x20;
  if (in(cp, 0x460, 0x481)) return even_odd_pair(cp);
  if (in(cp, 0x48A, 0x4BF)) return even_odd_pair(cp);
  if (cp == 0x4C0) return 0x4CF;
  if (in(cp, 0x4C1, 0x4CE)) return odd_even_pair(cp);
  if (in(cp, 0x4D0, 0x52F)) return even_odd_pair(cp);
  // Armenian
  if (in(cp, 0x531, 0x556)) return cp + 0x30;
  // Latin Extended Additional
  if (in(cp, 0x1E00, 0x1E95)) return even_odd_pair(cp);
  if (cp == 0x1E9E) return 0xDF;
  if (in(cp, 0x1EA0, 0x1EFF)) return even_odd_pair(cp);
  // Fullwidth Latin
  if (in(cp, 0xFF21, 0xFF3A)) return cp + 0x20;
  return cp;
}

std::optional<std::string> lowercase_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (lead < 0x80) {
      cp = lead;
      len = 1;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      len = 2;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      len = 3;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      len = 4;
    } else {
      return std::nullopt;
    }
    if (i + len > text.size()) {
      return std::nullopt;
    }
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        return std::nullopt;
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    // Reject overlong forms, surrogates and out-of-range values.
    static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return std::nullopt;
    }
    append_utf8(out, lowercase_code_point(cp));
    i += len;
  }
  return out;
}

}  // namespace wordrank
