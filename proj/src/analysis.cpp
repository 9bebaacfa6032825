#include "lexisent/analysis.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <utility>

namespace lexisent {

std::vector<WordSentimentCount> word_sentiment_counts(std::span<const TidyToken> tokens,
                                                      const NrcLexicon& lex) {
    std::map<std::pair<std::string, SentimentCategory>, std::size_t> counts;
    for (const auto& t : tokens) {
        for (auto c : lex.lookup(t.word).to_vector()) ++counts[{t.word, c}];
    }
    std::vector<WordSentimentCount> out;
    out.reserve(counts.size());
    for (const auto& [key, n] : counts) out.push_back({key.first, key.second, n});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.n != b.n) return a.n > b.n;
        if (a.word != b.word) return a.word < b.word;
        return label_less(a.sentiment, b.sentiment);
    });
    return out;
}

std::vector<WordSentimentCount> filter_min_count(std::span<const WordSentimentCount> table,
                                                 std::size_t min_n) {
    std::vector<WordSentimentCount> out;
    std::copy_if(table.begin(), table.end(), std::back_inserter(out),
                 [min_n](const auto& row) { return row.n >= min_n; });
    return out;
}

std::vector<DistributionRow> sentiment_distribution(std::span<const TidyToken> tokens,
                                                    const NrcLexicon& lex) {
    std::array<std::size_t, kCategoryCount> totals{};
    for (const auto& t : tokens) {
        for (auto c : lex.lookup(t.word).to_vector()) ++totals[static_cast<std::size_t>(c)];
    }
    std::vector<DistributionRow> out;
    out.reserve(kCategoryCount);
    for (auto c : kAllCategories) out.push_back({c, totals[static_cast<std::size_t>(c)]});
    return out;
}

std::vector<LineSentimentCount> line_sentiment_counts(std::span<const TidyToken> tokens,
                                                      const NrcLexicon& lex) {
    std::map<std::pair<std::size_t, SentimentCategory>, std::size_t> counts;
    for (const auto& t : tokens) {
        for (auto c : lex.lookup(t.word).to_vector()) ++counts[{t.line, c}];
    }
    std::vector<LineSentimentCount> out;
    out.reserve(counts.size());
    for (const auto& [key, n] : counts) out.push_back({key.first, key.second, n});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.n != b.n) return a.n > b.n;
        if (a.line != b.line) return a.line < b.line;
        return label_less(a.sentiment, b.sentiment);
    });
    return out;
}

std::vector<BingMatch> bing_matches(std::span<const TidyToken> tokens, const BingLexicon& lex) {
    std::vector<BingMatch> out;
    for (const auto& t : tokens) {
        if (auto p = lex.lookup(t.word)) out.push_back({t.line, t.word, *p});
    }
    return out;
}

std::vector<LineScore> line_scores(std::span<const TidyToken> tokens, const BingLexicon& lex) {
    std::map<std::size_t, std::int64_t> sums;
    for (const auto& m : bing_matches(tokens, lex)) {
        sums[m.line] += m.polarity == Polarity::positive ? 1 : -1;
    }
    std::vector<LineScore> out;
    out.reserve(sums.size());
    for (const auto& [line, score] : sums) out.push_back({line, score});
    return out;
}

std::vector<LineSentimentCount> subset_line(std::span<const LineSentimentCount> table,
                                            std::size_t line) {
    std::vector<LineSentimentCount> out;
    std::copy_if(table.begin(), table.end(), std::back_inserter(out),
                 [line](const auto& row) { return row.line == line; });
    return out;
}

}  // namespace lexisent
