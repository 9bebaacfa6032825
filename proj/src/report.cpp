#include "lexisent/report.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <map>

#include <fmt/format.h>
#include <json.hpp>

#include "lexisent/error.hpp"
#include "lexisent/render.hpp"

namespace lexisent {
namespace {

using Json = nlohmann::ordered_json;

Json table(std::initializer_list<std::string_view> columns, Json rows) {
    Json t;
    t["columns"] = Json::array();
    for (auto c : columns) t["columns"].push_back(c);
    t["rows"] = std::move(rows);
    return t;
}

Json curve_json(const CurveResult& result) {
    Json rows = Json::array();
    if (result.curve) {
        for (const auto& p : *result.curve) rows.push_back({p.x, p.y_hat});
    }
    auto t = table({"x", "y_hat"}, std::move(rows));
    t["status"] = result.status;
    return t;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("failed writing " + path.string());
}

bool wants(OutputFormat selected, OutputFormat kind) {
    return selected == OutputFormat::all || selected == kind;
}

std::vector<std::string> conservation_violations(
    const std::map<std::string, long long>& word_totals_by_category,
    const std::map<std::string, long long>& distribution, long long word_sum, long long line_sum) {
    std::vector<std::string> out;
    for (const auto& [category, total] : distribution) {
        const auto it = word_totals_by_category.find(category);
        const long long from_words = it == word_totals_by_category.end() ? 0 : it->second;
        if (from_words != total) {
            out.push_back(fmt::format("distribution[{}] = {} but word counts sum to {}", category,
                                      total, from_words));
        }
    }
    for (const auto& [category, total] : word_totals_by_category) {
        if (!distribution.contains(category)) {
            out.push_back(fmt::format("word counts use category {} missing from distribution",
                                      category));
        }
    }
    if (word_sum != line_sum) {
        out.push_back(fmt::format("word counts sum to {} but line counts sum to {}", word_sum,
                                  line_sum));
    }
    return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view label) {
    if (label == "svg") return OutputFormat::svg;
    if (label == "csv") return OutputFormat::csv;
    if (label == "json") return OutputFormat::json;
    if (label == "all") return OutputFormat::all;
    throw Error("unknown output format '" + std::string(label) + "'");
}

std::string word_counts_csv(std::span<const WordSentimentCount> rows) {
    std::string out = "word,sentiment,n\n";
    for (const auto& r : rows) out += fmt::format("{},{},{}\n", r.word, to_string(r.sentiment), r.n);
    return out;
}

std::string distribution_csv(std::span<const DistributionRow> rows) {
    std::string out = "sentiment,total\n";
    for (const auto& r : rows) out += fmt::format("{},{}\n", to_string(r.sentiment), r.total);
    return out;
}

std::string line_counts_csv(std::span<const LineSentimentCount> rows) {
    std::string out = "line,sentiment,n\n";
    for (const auto& r : rows) out += fmt::format("{},{},{}\n", r.line, to_string(r.sentiment), r.n);
    return out;
}

std::string line_scores_csv(std::span<const LineScore> rows) {
    std::string out = "line,score\n";
    for (const auto& r : rows) out += fmt::format("{},{}\n", r.line, r.score);
    return out;
}

std::string curve_csv(const SmoothedCurve& curve) {
    std::string out = "x,y_hat\n";
    for (const auto& p : curve) out += fmt::format("{},{}\n", p.x, p.y_hat);
    return out;
}

std::string results_json(const DocumentReport& report, const AnalysisOptions& analysis,
                         const OutputOptions& output) {
    Json doc;
    doc["document"] = report.document;
    doc["paragraph_count"] = report.paragraph_count;

    Json words = Json::array();
    for (const auto& r : report.word_counts) words.push_back({r.word, to_string(r.sentiment), r.n});
    doc["word_sentiment_counts"] = table({"word", "sentiment", "n"}, std::move(words));

    Json dist = Json::array();
    for (const auto& r : report.distribution) dist.push_back({to_string(r.sentiment), r.total});
    doc["distribution"] = table({"sentiment", "total"}, std::move(dist));

    Json lines = Json::array();
    for (const auto& r : report.line_counts) lines.push_back({r.line, to_string(r.sentiment), r.n});
    doc["line_sentiment_counts"] = table({"line", "sentiment", "n"}, std::move(lines));

    Json scores = Json::array();
    for (const auto& r : report.line_scores) scores.push_back({r.line, r.score});
    doc["line_scores"] = table({"line", "score"}, std::move(scores));

    doc["conditional_mean_curve"] = curve_json(report.conditional_mean);
    doc["score_curve"] = curve_json(report.score);

    Json config;
    config["nrc"] = output.nrc_source;
    config["bing"] = output.bing_source;
    config["stopwords"] = analysis.stop_words_source;
    config["custom_stopwords"] = analysis.custom_stop_words;
    config["min_count"] = analysis.min_count;
    config["span"] = analysis.loess.span;
    config["degree"] = analysis.loess.degree;
    config["grid_points"] = analysis.loess.grid_points;
    config["paragraph_mode"] = to_string(analysis.paragraph_mode);
    doc["config"] = std::move(config);
    return doc.dump(2) + "\n";
}

std::string comparison_json(const DocumentReport& a, const DocumentReport& b,
                            const LoessConfig& config) {
    Json doc;
    doc["documents"] = {a.document, b.document};

    Json dist = Json::array();
    for (std::size_t i = 0; i < a.distribution.size() && i < b.distribution.size(); ++i) {
        dist.push_back({to_string(a.distribution[i].sentiment), a.distribution[i].total,
                        b.distribution[i].total});
    }
    doc["distribution"] = table({"sentiment", "a", "b"}, std::move(dist));

    Json curves;
    curves["a"] = curve_json(a.score);
    curves["b"] = curve_json(b.score);
    doc["score_curves"] = std::move(curves);

    Json shared = table({"x", "a", "b"}, Json::array());
    if (a.score.curve && b.score.curve) {
        const double lo = std::max(a.score.curve->front().x, b.score.curve->front().x);
        const double hi = std::min(a.score.curve->back().x, b.score.curve->back().x);
        if (hi > lo) {
            std::vector<double> grid(config.grid_points);
            const double step = (hi - lo) / static_cast<double>(grid.size() - 1);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                grid[i] = lo + step * static_cast<double>(i);
            }
            grid.back() = hi;
            const auto ya = loess_evaluate(a.score.series, config, grid);
            const auto yb = loess_evaluate(b.score.series, config, grid);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                shared["rows"].push_back({grid[i], ya[i], yb[i]});
            }
            shared["status"] = "ok";
        } else {
            shared["status"] = "skipped: line ranges do not overlap";
        }
    } else {
        shared["status"] = "skipped: a score curve is unavailable";
    }
    doc["shared_score_grid"] = std::move(shared);
    return doc.dump(2) + "\n";
}

std::array<std::string, 4> render_panels(const DocumentReport& report, std::size_t min_count,
                                         std::size_t width_px, std::size_t height_px) {
    std::array<std::string, 4> panels;
    auto frequent = filter_min_count(report.word_counts, min_count);
    if (frequent.empty()) {
        const auto spec = frequency_chart({});
        panels[0] = render_placeholder(spec.title, fmt::format("no words with n >= {}", min_count),
                                       width_px, height_px);
    } else {
        panels[0] = render_chart(frequency_chart(std::move(frequent)), width_px, height_px);
    }
    panels[1] = render_chart(distribution_chart(report.distribution), width_px, height_px);

    auto curve_panel = [&](const CurveResult& result, ChartSpec (*make)(SmoothedCurve)) {
        if (result.curve) return render_chart(make(*result.curve), width_px, height_px);
        return render_placeholder(make({}).title, result.status, width_px, height_px);
    };
    panels[2] = curve_panel(report.conditional_mean, &conditional_mean_chart);
    panels[3] = curve_panel(report.score, &score_chart);
    return panels;
}

std::vector<std::filesystem::path> write_document_outputs(const DocumentReport& report,
                                                          const AnalysisOptions& analysis,
                                                          const OutputOptions& output,
                                                          const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;
    auto emit = [&](const std::string& name, std::string_view content) {
        const auto path = out_dir / name;
        write_file(path, content);
        written.push_back(path);
    };
    const auto& doc = report.document;

    if (wants(output.format, OutputFormat::svg)) {
        const auto panels =
            render_panels(report, analysis.min_count, output.chart_width, output.chart_height);
        constexpr std::array<std::string_view, 4> suffixes = {"frequency", "distribution",
                                                              "conditional_mean", "score"};
        for (std::size_t i = 0; i < 4; ++i) emit(fmt::format("{}_{}.svg", doc, suffixes[i]), panels[i]);
        const auto cells = render_panels(report, analysis.min_count, output.dashboard_width / 2,
                                         output.dashboard_height / 2);
        emit(doc + "_dashboard.svg",
             compose_dashboard(cells, output.dashboard_width, output.dashboard_height));
    }
    if (wants(output.format, OutputFormat::csv)) {
        emit(doc + "_word_sentiment_counts.csv", word_counts_csv(report.word_counts));
        emit(doc + "_distribution.csv", distribution_csv(report.distribution));
        emit(doc + "_line_sentiment_counts.csv", line_counts_csv(report.line_counts));
        emit(doc + "_line_scores.csv", line_scores_csv(report.line_scores));
        if (report.conditional_mean.curve) {
            emit(doc + "_conditional_mean_curve.csv", curve_csv(*report.conditional_mean.curve));
        }
        if (report.score.curve) emit(doc + "_score_curve.csv", curve_csv(*report.score.curve));
    }
    if (wants(output.format, OutputFormat::json)) {
        emit("results.json", results_json(report, analysis, output));
    }
    return written;
}

std::vector<std::string> check_report(const DocumentReport& report) {
    std::map<std::string, long long> by_category;
    long long word_sum = 0;
    for (const auto& r : report.word_counts) {
        by_category[std::string(to_string(r.sentiment))] += static_cast<long long>(r.n);
        word_sum += static_cast<long long>(r.n);
    }
    std::map<std::string, long long> distribution;
    for (const auto& r : report.distribution) {
        distribution[std::string(to_string(r.sentiment))] = static_cast<long long>(r.total);
    }
    long long line_sum = 0;
    for (const auto& r : report.line_counts) line_sum += static_cast<long long>(r.n);
    auto out = conservation_violations(by_category, distribution, word_sum, line_sum);

    std::map<std::size_t, std::pair<long long, long long>> pn;
    for (const auto& m : report.bing_matches) {
        auto& [p, n] = pn[m.line];
        (m.polarity == Polarity::positive ? p : n) += 1;
    }
    std::map<std::size_t, long long> tokens_per_line;
    for (const auto& t : report.tokens) ++tokens_per_line[t.line];
    if (pn.size() != report.line_scores.size()) {
        out.push_back(fmt::format("{} lines have Bing matches but {} line scores were reported",
                                  pn.size(), report.line_scores.size()));
    }
    for (const auto& s : report.line_scores) {
        const auto it = pn.find(s.line);
        if (it == pn.end()) {
            out.push_back(fmt::format("line {} scored without Bing matches", s.line));
            continue;
        }
        const auto [p, n] = it->second;
        if (s.score != p - n) {
            out.push_back(fmt::format("line {} score {} != {} - {}", s.line, s.score, p, n));
        }
        if (std::llabs(s.score) > p + n || p + n > tokens_per_line[s.line]) {
            out.push_back(fmt::format("line {} violates |score| <= P + N <= tokens", s.line));
        }
    }
    return out;
}

std::vector<std::string> check_results_json(std::string_view json_text) {
    std::vector<std::string> out;
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        return {std::string("results are not valid JSON: ") + e.what()};
    }
    for (const char* key : {"document", "paragraph_count", "word_sentiment_counts", "distribution",
                            "line_sentiment_counts", "line_scores", "conditional_mean_curve",
                            "score_curve", "config"}) {
        if (!doc.contains(key)) out.push_back(fmt::format("missing key '{}'", key));
    }
    if (!out.empty()) return out;

    std::map<std::string, long long> by_category;
    long long word_sum = 0;
    for (const auto& row : doc["word_sentiment_counts"]["rows"]) {
        by_category[row[1].get<std::string>()] += row[2].get<long long>();
        word_sum += row[2].get<long long>();
    }
    std::map<std::string, long long> distribution;
    for (const auto& row : doc["distribution"]["rows"]) {
        distribution[row[0].get<std::string>()] = row[1].get<long long>();
    }
    long long line_sum = 0;
    for (const auto& row : doc["line_sentiment_counts"]["rows"]) line_sum += row[2].get<long long>();
    auto violations = conservation_violations(by_category, distribution, word_sum, line_sum);
    out.insert(out.end(), violations.begin(), violations.end());
    return out;
}

}  // namespace lexisent
