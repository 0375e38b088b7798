#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace wordrank {

/// Simple (one-to-one) default lowercase mapping for the Latin, Greek,
/// Cyrillic and Armenian blocks; other code points pass through. No locale
/// rules. Returns nullopt for malformed UTF-8.
std::optional<std::string> lowercase_utf8(std::string_view text);

char32_t lowercase_code_point(char32_t cp);

}  // namespace wordrank
