#pragma once

// Minimal UTF-8 codec and character classes used by the tokenizer.
// Classification is block-based: a non-ASCII code point is a letter unless it
// falls in a known punctuation, symbol, space, or private-use range.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexisent::utf8 {

struct DecodedChar {
    char32_t cp;
    std::size_t offset;  // byte offset in the source
    std::size_t length;  // encoded length in bytes
};

/// Returns the byte offset of the first invalid sequence, or nullopt if valid.
std::optional<std::size_t> find_invalid(std::string_view bytes);

/// Decodes valid UTF-8. Behavior on invalid input is to substitute U+FFFD.
std::vector<DecodedChar> decode(std::string_view bytes);

void append(std::string& out, char32_t cp);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_apostrophe(char32_t cp);
bool is_space(char32_t cp);
char32_t to_lower(char32_t cp);

inline constexpr std::string_view kByteOrderMark = "\xEF\xBB\xBF";

}  // namespace lexisent::utf8
