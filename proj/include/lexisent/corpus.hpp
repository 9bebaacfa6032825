#pragma once

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace lexisent {

enum class ParagraphMode {
    line,        ///< every non-blank physical line is a paragraph
    blank_line,  ///< runs of non-blank lines separated by blank lines
};

ParagraphMode parse_paragraph_mode(std::string_view label);
std::string_view to_string(ParagraphMode mode);

/// A loaded text with 1-indexed paragraphs. Paragraphs are never empty.
class RawDocument {
  public:
    RawDocument() = default;
    RawDocument(std::string source_name, std::vector<std::string> paragraphs);

    const std::string& source_name() const noexcept { return source_name_; }
    std::size_t paragraph_count() const noexcept { return paragraphs_.size(); }
    /// `line` is 1-based.
    const std::string& paragraph(std::size_t line) const;
    const std::vector<std::string>& paragraphs() const noexcept { return paragraphs_; }

  private:
    std::string source_name_;
    std::vector<std::string> paragraphs_;
};

struct TidyToken {
    std::size_t line = 0;
    std::string word;

    friend bool operator==(const TidyToken&, const TidyToken&) = default;
};

using TokenTable = std::vector<TidyToken>;

class StopWordList {
  public:
    StopWordList() = default;
    StopWordList(std::initializer_list<std::string_view> words);
    explicit StopWordList(std::span<const std::string> words);

    /// Exact match on an already-lowercased token.
    bool contains(std::string_view word) const;
    std::size_t size() const noexcept { return words_.size(); }
    void insert(std::string_view word);

  private:
    std::unordered_set<std::string> words_;
};

/// Splits decoded text into paragraphs. Throws EncodingError on invalid UTF-8.
RawDocument parse_document(std::string_view bytes, std::string source_name,
                           ParagraphMode mode = ParagraphMode::line);

/// Reads a UTF-8 TXT file (LF or CRLF, optional BOM).
RawDocument load_document(const std::filesystem::path& path,
                          ParagraphMode mode = ParagraphMode::line);

/// Tokens are maximal runs of letters, digits and internal apostrophes, lowercased.
TokenTable tokenize(const RawDocument& doc);
std::vector<std::string> tokenize_text(std::string_view text);

TokenTable remove_stop_words(std::span<const TidyToken> tokens, const StopWordList& standard,
                             const StopWordList& custom = {});

/// One word per line; '#' lines ignored; entries trimmed and lowercased.
StopWordList parse_stop_words(std::string_view text, const std::string& source_name = "<memory>");
StopWordList load_stop_words(const std::filesystem::path& path);

/// The bundled English list (SMART, Snowball and Onix sources merged).
const StopWordList& default_stop_words();

/// Lowercases ASCII and the common cased Unicode blocks; other code points pass through.
std::string to_lower_utf8(std::string_view text);

}  // namespace lexisent
