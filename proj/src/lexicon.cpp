#include "lexisent/lexicon.hpp"

#include <bit>
#include <unordered_map>

#include "lexisent/corpus.hpp"
#include "lexisent/error.hpp"
#include "text_io.hpp"

namespace lexisent {
namespace {

constexpr std::array<std::string_view, kCategoryCount> kCategoryLabels = {
    "positive", "negative", "anger",   "fear", "anticipation",
    "trust",    "surprise", "sadness", "joy",  "disgust",
};

std::string normalize_word(std::string_view raw) { return to_lower_utf8(detail::trim(raw)); }

}  // namespace

std::string_view to_string(SentimentCategory c) {
    return kCategoryLabels[static_cast<std::size_t>(c)];
}

std::optional<SentimentCategory> parse_category(std::string_view label) {
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        if (kCategoryLabels[i] == label) return kAllCategories[i];
    }
    return std::nullopt;
}

bool label_less(SentimentCategory a, SentimentCategory b) { return to_string(a) < to_string(b); }

std::string_view to_string(Polarity p) { return p == Polarity::positive ? "positive" : "negative"; }

std::optional<Polarity> parse_polarity(std::string_view label) {
    if (label == "positive") return Polarity::positive;
    if (label == "negative") return Polarity::negative;
    return std::nullopt;
}

std::size_t CategorySet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<SentimentCategory> CategorySet::to_vector() const {
    std::vector<SentimentCategory> out;
    for (auto c : kAllCategories) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

NrcLexicon::NrcLexicon(std::map<std::string, CategorySet> entries) {
    for (auto& [word, set] : entries) {
        const auto key = to_lower_utf8(word);
        if (key.empty()) throw Error("NRC lexicon: empty word");
        if (set.empty()) throw Error("NRC lexicon: word '" + key + "' has no categories");
        auto& slot = entries_[key];
        for (auto c : set.to_vector()) slot.insert(c);
    }
}

CategorySet NrcLexicon::lookup(std::string_view word) const {
    const auto it = entries_.find(word);
    return it == entries_.end() ? CategorySet{} : it->second;
}

std::string NrcLexicon::to_tsv() const {
    std::string out;
    for (const auto& [word, set] : entries_) {
        for (auto c : set.to_vector()) {
            out.append(word).append("\t").append(to_string(c)).append("\t1\n");
        }
    }
    return out;
}

BingLexicon::BingLexicon(std::map<std::string, Polarity> entries) {
    for (auto& [word, polarity] : entries) {
        const auto key = to_lower_utf8(word);
        if (key.empty()) throw Error("Bing lexicon: empty word");
        const auto [it, inserted] = entries_.emplace(key, polarity);
        if (!inserted && it->second != polarity) {
            throw Error("Bing lexicon: conflicting polarity for '" + key + "'");
        }
    }
}

std::optional<Polarity> BingLexicon::lookup(std::string_view word) const {
    const auto it = entries_.find(word);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string BingLexicon::to_tsv() const {
    std::string out;
    for (const auto& [word, polarity] : entries_) {
        out.append(word).append("\t").append(to_string(polarity)).append("\n");
    }
    return out;
}

NrcLexicon parse_nrc(std::string_view text, const std::string& source_name) {
    const auto valid = detail::validated_text(text, source_name);
    std::map<std::string, CategorySet> entries;
    std::size_t line_no = 0;
    for (const auto line : detail::split_lines(valid)) {
        ++line_no;
        if (detail::is_blank(line)) continue;
        const auto fields = detail::split(line, '\t');
        if (fields.size() != 3) {
            throw MalformedRow(source_name, line_no,
                               "expected 3 columns, found " + std::to_string(fields.size()));
        }
        const auto word = normalize_word(fields[0]);
        if (word.empty()) throw MalformedRow(source_name, line_no, "empty word");
        const auto label = detail::trim(fields[1]);
        const auto category = parse_category(label);
        if (!category) throw UnknownCategory(source_name, line_no, std::string(label));
        const auto flag = detail::trim(fields[2]);
        if (flag == "0") continue;
        if (flag != "1") {
            throw MalformedRow(source_name, line_no, "flag must be 0 or 1, got '" +
                                                         std::string(flag) + "'");
        }
        entries[word].insert(*category);
    }
    if (entries.empty()) throw EmptyLexicon(source_name);
    return NrcLexicon(std::move(entries));
}

NrcLexicon load_nrc(const std::filesystem::path& path) {
    return parse_nrc(detail::read_file(path), path.string());
}

BingLexicon parse_bing(std::string_view text, const std::string& source_name) {
    const auto valid = detail::validated_text(text, source_name);
    std::map<std::string, Polarity> entries;
    std::unordered_map<std::string, std::size_t> first_seen;
    std::size_t line_no = 0;
    for (const auto line : detail::split_lines(valid)) {
        ++line_no;
        if (detail::is_blank(line)) continue;
        const auto fields = detail::split(line, '\t');
        if (fields.size() != 2) {
            throw MalformedRow(source_name, line_no,
                               "expected 2 columns, found " + std::to_string(fields.size()));
        }
        const auto word = normalize_word(fields[0]);
        const auto label = detail::trim(fields[1]);
        if (line_no == 1 && word == "word" && label == "sentiment") continue;
        if (word.empty()) throw MalformedRow(source_name, line_no, "empty word");
        const auto polarity = parse_polarity(label);
        if (!polarity) throw UnknownPolarity(source_name, line_no, std::string(label));
        const auto [it, inserted] = entries.emplace(word, *polarity);
        if (inserted) {
            first_seen.emplace(word, line_no);
        } else if (it->second != *polarity) {
            throw ConflictingEntry(source_name, word, first_seen.at(word), line_no);
        }
    }
    return BingLexicon(std::move(entries));
}

BingLexicon load_bing(const std::filesystem::path& path) {
    return parse_bing(detail::read_file(path), path.string());
}

}  // namespace lexisent
