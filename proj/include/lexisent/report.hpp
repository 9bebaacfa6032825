#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexisent/pipeline.hpp"

namespace lexisent {

enum class OutputFormat { svg, csv, json, all };

OutputFormat parse_output_format(std::string_view label);

struct OutputOptions {
    OutputFormat format = OutputFormat::all;
    std::size_t chart_width = 800;
    std::size_t chart_height = 500;
    std::size_t dashboard_width = 1600;
    std::size_t dashboard_height = 1000;
    std::string nrc_source;   ///< recorded in the results config block
    std::string bing_source;
};

std::string word_counts_csv(std::span<const WordSentimentCount> rows);
std::string distribution_csv(std::span<const DistributionRow> rows);
std::string line_counts_csv(std::span<const LineSentimentCount> rows);
std::string line_scores_csv(std::span<const LineScore> rows);
std::string curve_csv(const SmoothedCurve& curve);

/// The combined results document (keys: document, paragraph_count,
/// word_sentiment_counts, distribution, line_sentiment_counts, line_scores,
/// conditional_mean_curve, score_curve, config).
std::string results_json(const DocumentReport& report, const AnalysisOptions& analysis,
                         const OutputOptions& output);

/// Pairs two reports: distributions side by side, both score curves, and both
/// score fits evaluated on a grid over the overlap of their line ranges.
std::string comparison_json(const DocumentReport& a, const DocumentReport& b,
                            const LoessConfig& config);

/// The four dashboard panels in reading order, with placeholders for empty data.
std::array<std::string, 4> render_panels(const DocumentReport& report, std::size_t min_count,
                                         std::size_t width_px, std::size_t height_px);

/// Writes charts, tables and results.json into `out_dir` (created if needed).
/// Returns the written paths in a fixed order.
std::vector<std::filesystem::path> write_document_outputs(const DocumentReport& report,
                                                          const AnalysisOptions& analysis,
                                                          const OutputOptions& output,
                                                          const std::filesystem::path& out_dir);

/// Conservation and score-decomposition checks; returns one message per violation.
std::vector<std::string> check_report(const DocumentReport& report);

/// Conservation checks recomputed from a serialized results document.
std::vector<std::string> check_results_json(std::string_view json_text);

}  // namespace lexisent
