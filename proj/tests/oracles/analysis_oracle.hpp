#pragma once

// Brute-force reference for the four counting kernels. Works on plain
// (word, label) pairs and never touches the library's lexicon types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

struct Token {
    std::size_t line;
    std::string word;
};

struct Entry {
    std::string word;
    std::string label;
};

using WordRow = std::tuple<std::string, std::string, std::size_t>;  // word, label, n
using LineRow = std::tuple<std::size_t, std::string, std::size_t>;  // line, label, n
using ScoreRow = std::pair<std::size_t, long long>;

inline const std::vector<std::string>& labels_in_order() {
    static const std::vector<std::string> labels = {"positive", "negative", "anger",   "fear",
                                                    "anticipation", "trust", "surprise", "sadness",
                                                    "joy",      "disgust"};
    return labels;
}

inline std::vector<std::string> distinct_words(const std::vector<Token>& tokens) {
    std::vector<std::string> words;
    for (const auto& t : tokens) {
        bool seen = false;
        for (const auto& w : words) seen = seen || w == t.word;
        if (!seen) words.push_back(t.word);
    }
    return words;
}

inline std::vector<std::size_t> distinct_lines(const std::vector<Token>& tokens) {
    std::vector<std::size_t> lines;
    for (const auto& t : tokens) {
        bool seen = false;
        for (auto l : lines) seen = seen || l == t.line;
        if (!seen) lines.push_back(t.line);
    }
    return lines;
}

inline bool has_entry(const std::vector<Entry>& lex, const std::string& word,
                      const std::string& label) {
    for (const auto& e : lex) {
        if (e.word == word && e.label == label) return true;
    }
    return false;
}

inline std::vector<WordRow> word_counts(const std::vector<Token>& tokens,
                                        const std::vector<Entry>& lex) {
    std::vector<WordRow> rows;
    for (const auto& w : distinct_words(tokens)) {
        for (const auto& label : labels_in_order()) {
            if (!has_entry(lex, w, label)) continue;
            std::size_t n = 0;
            for (const auto& t : tokens) n += t.word == w ? 1 : 0;
            rows.emplace_back(w, label, n);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const WordRow& a, const WordRow& b) {
        if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) > std::get<2>(b);
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    return rows;
}

inline std::vector<std::pair<std::string, std::size_t>> distribution(
    const std::vector<Token>& tokens, const std::vector<Entry>& lex) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& label : labels_in_order()) {
        std::size_t total = 0;
        for (const auto& t : tokens) total += has_entry(lex, t.word, label) ? 1 : 0;
        out.emplace_back(label, total);
    }
    return out;
}

inline std::vector<LineRow> line_counts(const std::vector<Token>& tokens,
                                        const std::vector<Entry>& lex) {
    std::vector<LineRow> rows;
    for (auto line : distinct_lines(tokens)) {
        for (const auto& label : labels_in_order()) {
            std::size_t n = 0;
            for (const auto& t : tokens) {
                if (t.line == line && has_entry(lex, t.word, label)) ++n;
            }
            if (n > 0) rows.emplace_back(line, label, n);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const LineRow& a, const LineRow& b) {
        if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) > std::get<2>(b);
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    return rows;
}

// `polarity` holds (word, "positive" | "negative").
inline std::vector<ScoreRow> line_scores(const std::vector<Token>& tokens,
                                         const std::vector<Entry>& polarity) {
    std::vector<ScoreRow> out;
    auto lines = distinct_lines(tokens);
    std::sort(lines.begin(), lines.end());
    for (auto line : lines) {
        long long score = 0;
        bool matched = false;
        for (const auto& t : tokens) {
            if (t.line != line) continue;
            if (has_entry(polarity, t.word, "positive")) {
                ++score;
                matched = true;
            }
            if (has_entry(polarity, t.word, "negative")) {
                --score;
                matched = true;
            }
        }
        if (matched) out.emplace_back(line, score);
    }
    return out;
}

}  // namespace oracle
