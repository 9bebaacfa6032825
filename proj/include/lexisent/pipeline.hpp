#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexisent/analysis.hpp"
#include "lexisent/corpus.hpp"
#include "lexisent/lexicon.hpp"
#include "lexisent/loess.hpp"

namespace lexisent {

struct AnalysisOptions {
    StopWordList stop_words = default_stop_words();
    std::string stop_words_source = "builtin";
    std::vector<std::string> custom_stop_words;
    std::size_t min_count = 3;  // keeps n >= 3, i.e. n > 2
    LoessConfig loess{};
    ParagraphMode paragraph_mode = ParagraphMode::line;
};

/// Outcome of smoothing one series. `curve` is empty when smoothing was skipped.
struct CurveResult {
    std::vector<SeriesPoint> series;
    std::optional<SmoothedCurve> curve;
    std::string status = "ok";  ///< "ok" or "skipped: <reason>"
};

struct DocumentReport {
    std::string document;
    std::size_t paragraph_count = 0;
    std::size_t token_count = 0;  ///< after stop-word removal
    TokenTable tokens;
    std::vector<WordSentimentCount> word_counts;
    std::vector<DistributionRow> distribution;
    std::vector<LineSentimentCount> line_counts;
    std::vector<BingMatch> bing_matches;
    std::vector<LineScore> line_scores;
    CurveResult conditional_mean;
    CurveResult score;
    std::vector<std::string> warnings;
};

/// Runs tokenization, stop-word removal, the four analyses, and both smoothers.
/// Smoothing failures are recorded in the curve status, never thrown.
DocumentReport analyze_document(const RawDocument& doc, const NrcLexicon& nrc,
                                const BingLexicon& bing, const AnalysisOptions& options);

/// Document label used in file names: the file stem of the source.
std::string document_label(const RawDocument& doc);

}  // namespace lexisent
