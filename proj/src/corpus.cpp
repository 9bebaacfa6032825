#include "lexisent/corpus.hpp"

#include <stdexcept>

#include "lexisent/error.hpp"
#include "text_io.hpp"
#include "utf8.hpp"

namespace lexisent {

extern const std::string_view kDefaultStopWordsText;

ParagraphMode parse_paragraph_mode(std::string_view label) {
    if (label == "line") return ParagraphMode::line;
    if (label == "blank-line") return ParagraphMode::blank_line;
    throw Error("unknown paragraph mode '" + std::string(label) + "' (expected line or blank-line)");
}

std::string_view to_string(ParagraphMode mode) {
    return mode == ParagraphMode::line ? "line" : "blank-line";
}

RawDocument::RawDocument(std::string source_name, std::vector<std::string> paragraphs)
    : source_name_(std::move(source_name)), paragraphs_(std::move(paragraphs)) {
    for (std::size_t i = 0; i < paragraphs_.size(); ++i) {
        if (detail::is_blank(paragraphs_[i])) {
            throw Error("paragraph " + std::to_string(i + 1) + " of " + source_name_ + " is empty");
        }
    }
}

const std::string& RawDocument::paragraph(std::size_t line) const {
    if (line == 0 || line > paragraphs_.size()) {
        throw std::out_of_range("paragraph index " + std::to_string(line) + " out of range");
    }
    return paragraphs_[line - 1];
}

StopWordList::StopWordList(std::initializer_list<std::string_view> words) {
    for (auto w : words) insert(w);
}

StopWordList::StopWordList(std::span<const std::string> words) {
    for (const auto& w : words) insert(w);
}

bool StopWordList::contains(std::string_view word) const {
    return words_.find(std::string(word)) != words_.end();
}

void StopWordList::insert(std::string_view word) { words_.insert(to_lower_utf8(word)); }

RawDocument parse_document(std::string_view bytes, std::string source_name, ParagraphMode mode) {
    const auto text = detail::validated_text(bytes, source_name);
    std::vector<std::string> paragraphs;
    std::string pending;
    for (const auto& line : detail::split_lines(text)) {
        if (detail::is_blank(line)) {
            if (!pending.empty()) paragraphs.push_back(std::move(pending));
            pending.clear();
            continue;
        }
        if (mode == ParagraphMode::line) {
            paragraphs.emplace_back(line);
        } else {
            if (!pending.empty()) pending.push_back(' ');
            pending.append(line);
        }
    }
    if (!pending.empty()) paragraphs.push_back(std::move(pending));
    return RawDocument(std::move(source_name), std::move(paragraphs));
}

RawDocument load_document(const std::filesystem::path& path, ParagraphMode mode) {
    return parse_document(detail::read_file(path), path.string(), mode);
}

std::vector<std::string> tokenize_text(std::string_view text) {
    const auto chars = utf8::decode(text);
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
    };
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const char32_t cp = chars[i].cp;
        if (utf8::is_letter(cp) || utf8::is_digit(cp)) {
            utf8::append(current, utf8::to_lower(cp));
        } else if (utf8::is_apostrophe(cp) && i > 0 && i + 1 < chars.size() &&
                   utf8::is_letter(chars[i - 1].cp) && utf8::is_letter(chars[i + 1].cp)) {
            current.push_back('\'');
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

TokenTable tokenize(const RawDocument& doc) {
    TokenTable out;
    for (std::size_t i = 0; i < doc.paragraph_count(); ++i) {
        for (auto& word : tokenize_text(doc.paragraphs()[i])) {
            out.push_back({i + 1, std::move(word)});
        }
    }
    return out;
}

TokenTable remove_stop_words(std::span<const TidyToken> tokens, const StopWordList& standard,
                             const StopWordList& custom) {
    TokenTable out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (!standard.contains(t.word) && !custom.contains(t.word)) out.push_back(t);
    }
    return out;
}

StopWordList parse_stop_words(std::string_view text, const std::string& source_name) {
    const auto valid = detail::validated_text(text, source_name);
    StopWordList list;
    for (const auto& line : detail::split_lines(valid)) {
        const auto word = detail::trim(line);
        if (word.empty() || word.front() == '#') continue;
        list.insert(word);
    }
    return list;
}

StopWordList load_stop_words(const std::filesystem::path& path) {
    return parse_stop_words(detail::read_file(path), path.string());
}

const StopWordList& default_stop_words() {
    static const StopWordList list = parse_stop_words(kDefaultStopWordsText, "<builtin>");
    return list;
}

std::string to_lower_utf8(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const auto& c : utf8::decode(text)) utf8::append(out, utf8::to_lower(c.cp));
    return out;
}

}  // namespace lexisent
