#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lexisent::detail {

/// Whole-file read; throws FileNotFound.
std::string read_file(const std::filesystem::path& path);

/// Validates UTF-8 and strips a leading BOM. Throws EncodingError.
std::string_view validated_text(std::string_view bytes, const std::string& source_name);

/// Splits on LF, dropping a trailing CR from each line. A final empty line
/// after the last terminator is not reported.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep);

std::string_view trim(std::string_view s);

/// True when the text holds nothing but whitespace.
bool is_blank(std::string_view s);

}  // namespace lexisent::detail
