#include "lexisent/pipeline.hpp"

#include <filesystem>

#include "lexisent/error.hpp"

namespace lexisent {
namespace {

CurveResult smooth(std::vector<SeriesPoint> series, const LoessConfig& config) {
    CurveResult result;
    result.series = std::move(series);
    try {
        result.curve = loess_fit(result.series, config);
    } catch (const InsufficientData& e) {
        result.status = std::string("skipped: InsufficientData (") + e.what() + ")";
    } catch (const DegenerateNeighborhood& e) {
        result.status = std::string("skipped: DegenerateNeighborhood (") + e.what() + ")";
    }
    return result;
}

}  // namespace

std::string document_label(const RawDocument& doc) {
    auto stem = std::filesystem::path(doc.source_name()).stem().string();
    return stem.empty() ? std::string("document") : stem;
}

DocumentReport analyze_document(const RawDocument& doc, const NrcLexicon& nrc,
                                const BingLexicon& bing, const AnalysisOptions& options) {
    validate(options.loess);
    if (options.min_count < 1) throw std::invalid_argument("min_count must be at least 1");

    DocumentReport report;
    report.document = document_label(doc);
    report.paragraph_count = doc.paragraph_count();

    const StopWordList custom(options.custom_stop_words);
    report.tokens = remove_stop_words(tokenize(doc), options.stop_words, custom);
    report.token_count = report.tokens.size();

    report.word_counts = word_sentiment_counts(report.tokens, nrc);
    report.distribution = sentiment_distribution(report.tokens, nrc);
    report.line_counts = line_sentiment_counts(report.tokens, nrc);
    report.bing_matches = bing_matches(report.tokens, bing);
    report.line_scores = line_scores(report.tokens, bing);

    if (report.word_counts.empty()) report.warnings.push_back("no NRC lexicon matches");
    if (report.bing_matches.empty()) report.warnings.push_back("no Bing lexicon matches");

    std::vector<SeriesPoint> counts;
    counts.reserve(report.line_counts.size());
    for (const auto& r : report.line_counts) {
        counts.push_back({static_cast<double>(r.line), static_cast<double>(r.n)});
    }
    report.conditional_mean = smooth(std::move(counts), options.loess);

    std::vector<SeriesPoint> scores;
    scores.reserve(report.line_scores.size());
    for (const auto& r : report.line_scores) {
        scores.push_back({static_cast<double>(r.line), static_cast<double>(r.score)});
    }
    report.score = smooth(std::move(scores), options.loess);

    if (!report.conditional_mean.curve) {
        report.warnings.push_back("conditional mean curve " + report.conditional_mean.status);
    }
    if (!report.score.curve) report.warnings.push_back("score curve " + report.score.status);
    return report;
}

}  // namespace lexisent
