#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lexisent/corpus.hpp"
#include "lexisent/lexicon.hpp"

namespace lexisent {

struct WordSentimentCount {
    std::string word;
    SentimentCategory sentiment;
    std::size_t n;

    friend bool operator==(const WordSentimentCount&, const WordSentimentCount&) = default;
};

struct LineSentimentCount {
    std::size_t line;
    SentimentCategory sentiment;
    std::size_t n;

    friend bool operator==(const LineSentimentCount&, const LineSentimentCount&) = default;
};

struct DistributionRow {
    SentimentCategory sentiment;
    std::size_t total;

    friend bool operator==(const DistributionRow&, const DistributionRow&) = default;
};

struct LineScore {
    std::size_t line;
    std::int64_t score;

    friend bool operator==(const LineScore&, const LineScore&) = default;
};

/// One token that matched the Bing lexicon, in token order.
struct BingMatch {
    std::size_t line;
    std::string word;
    Polarity polarity;

    friend bool operator==(const BingMatch&, const BingMatch&) = default;
};

/// Sorted by n descending, then word, then category label.
std::vector<WordSentimentCount> word_sentiment_counts(std::span<const TidyToken> tokens,
                                                      const NrcLexicon& lex);

/// Keeps rows with n >= min_n, preserving order. min_n = 3 is the `n > 2` cut.
std::vector<WordSentimentCount> filter_min_count(std::span<const WordSentimentCount> table,
                                                 std::size_t min_n);

/// Occurrence-weighted totals for all ten categories, in enumeration order.
std::vector<DistributionRow> sentiment_distribution(std::span<const TidyToken> tokens,
                                                    const NrcLexicon& lex);

/// Sorted by n descending, then line, then category label. Zero rows are omitted.
std::vector<LineSentimentCount> line_sentiment_counts(std::span<const TidyToken> tokens,
                                                      const NrcLexicon& lex);

std::vector<BingMatch> bing_matches(std::span<const TidyToken> tokens, const BingLexicon& lex);

/// Per-line (+1 positive, -1 negative) sums, line ascending; unmatched lines omitted.
std::vector<LineScore> line_scores(std::span<const TidyToken> tokens, const BingLexicon& lex);

std::vector<LineSentimentCount> subset_line(std::span<const LineSentimentCount> table,
                                            std::size_t line);

}  // namespace lexisent
