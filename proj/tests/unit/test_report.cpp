#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lexisent/error.hpp"
#include "lexisent/pipeline.hpp"
#include "lexisent/report.hpp"

using namespace lexisent;
namespace fs = std::filesystem;

#ifndef LEXISENT_DATA_DIR
#define LEXISENT_DATA_DIR "data"
#endif

namespace {

const fs::path kDemo = fs::path(LEXISENT_DATA_DIR) / "demo";

struct Demo {
    NrcLexicon nrc = load_nrc(kDemo / "demo_nrc.tsv");
    BingLexicon bing = load_bing(kDemo / "demo_bing.tsv");
};

const Demo& demo() {
    static const Demo d;
    return d;
}

DocumentReport run(const std::string& name, const AnalysisOptions& opts = {}) {
    const auto doc = load_document(kDemo / name, opts.paragraph_mode);
    return analyze_document(doc, demo().nrc, demo().bing, opts);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("lexisent_report_" + name);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("demo corpora satisfy the conservation laws") {
    AnalysisOptions blank;
    blank.paragraph_mode = ParagraphMode::blank_line;
    for (const auto& [name, opts] : {std::pair{std::string("doc_a.txt"), AnalysisOptions{}},
                                     {"doc_b.txt", AnalysisOptions{}},
                                     {"story.txt", blank}}) {
        const auto report = run(name, opts);
        CHECK(report.paragraph_count > 0);
        CHECK_FALSE(report.word_counts.empty());
        CHECK(check_report(report).empty());
        CHECK(check_results_json(results_json(report, opts, {})).empty());
    }
}

TEST_CASE("check_report notices tampering") {
    auto report = run("doc_a.txt");
    report.distribution[0].total += 1;
    CHECK_FALSE(check_report(report).empty());
    report = run("doc_a.txt");
    report.line_scores.front().score += 1;
    CHECK_FALSE(check_report(report).empty());
    report = run("doc_a.txt");
    report.line_counts.pop_back();
    CHECK_FALSE(check_report(report).empty());

    const auto json = results_json(run("doc_b.txt"), {}, {});
    auto parsed = nlohmann::ordered_json::parse(json);
    parsed["distribution"]["rows"][1][1] = 999;
    CHECK_FALSE(check_results_json(parsed.dump()).empty());
    CHECK_FALSE(check_results_json("{").empty());
    CHECK_FALSE(check_results_json("{}").empty());
}

TEST_CASE("results json schema") {
    const auto report = run("doc_a.txt");
    const auto j = nlohmann::ordered_json::parse(results_json(report, {}, {}));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"document", "paragraph_count", "word_sentiment_counts",
                                           "distribution", "line_sentiment_counts", "line_scores",
                                           "conditional_mean_curve", "score_curve", "config"});
    CHECK(j["document"] == "doc_a");
    CHECK(j["paragraph_count"] == 12);
    CHECK(j["word_sentiment_counts"]["columns"] == nlohmann::json({"word", "sentiment", "n"}));
    CHECK(j["distribution"]["columns"] == nlohmann::json({"sentiment", "total"}));
    CHECK(j["line_sentiment_counts"]["columns"] == nlohmann::json({"line", "sentiment", "n"}));
    CHECK(j["line_scores"]["columns"] == nlohmann::json({"line", "score"}));
    CHECK(j["distribution"]["rows"].size() == 10);
    CHECK(j["score_curve"]["status"] == "ok");
    CHECK(j["score_curve"]["rows"].size() == 80);
    CHECK(j["line_scores"]["rows"][0][1].is_number_integer());
    CHECK(j["config"]["span"] == 0.2);
    CHECK(j["config"]["min_count"] == 3);
}

TEST_CASE("empty and all-stop-word documents") {
    for (const auto& text : {std::string(""), std::string("the and of\nshe is always\n")}) {
        const auto doc = parse_document(text, "blank.txt");
        const auto report = analyze_document(doc, demo().nrc, demo().bing, {});
        CHECK(report.word_counts.empty());
        CHECK(report.line_counts.empty());
        CHECK(report.line_scores.empty());
        for (const auto& r : report.distribution) CHECK(r.total == 0);
        CHECK_FALSE(report.conditional_mean.curve.has_value());
        CHECK(report.score.status.rfind("skipped: InsufficientData", 0) == 0);
        CHECK_FALSE(report.warnings.empty());
        CHECK(check_report(report).empty());

        const auto dir = fresh_dir("empty");
        write_document_outputs(report, {}, {}, dir);
        CHECK(fs::exists(dir / "results.json"));
        CHECK(fs::exists(dir / "blank_dashboard.svg"));
        CHECK(fs::exists(dir / "blank_line_scores.csv"));
        CHECK_FALSE(fs::exists(dir / "blank_score_curve.csv"));
        CHECK_FALSE(fs::exists(dir / "blank_conditional_mean_curve.csv"));
        fs::remove_all(dir);
    }
}

TEST_CASE("custom stop words") {
    AnalysisOptions opts;
    opts.custom_stop_words = {"Friend", "happy"};
    const auto report = run("doc_a.txt", opts);
    for (const auto& t : report.tokens) {
        CHECK(t.word != "friend");
        CHECK(t.word != "happy");
    }
    CHECK(report.token_count < run("doc_a.txt").token_count);
}

TEST_CASE("csv exports") {
    const auto report = run("doc_b.txt");
    const auto words = word_counts_csv(report.word_counts);
    CHECK(words.rfind("word,sentiment,n\n", 0) == 0);
    CHECK(distribution_csv(report.distribution).rfind("sentiment,total\npositive,", 0) == 0);
    CHECK(line_counts_csv(report.line_counts).rfind("line,sentiment,n\n", 0) == 0);
    CHECK(line_scores_csv(report.line_scores).rfind("line,score\n", 0) == 0);
    CHECK(curve_csv(*report.score.curve).rfind("x,y_hat\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : words) lines += c == '\n';
    CHECK(lines == report.word_counts.size() + 1);
}

TEST_CASE("written outputs are complete and deterministic") {
    const auto report = run("doc_a.txt");
    const auto d1 = fresh_dir("det1");
    const auto d2 = fresh_dir("det2");
    const auto files = write_document_outputs(report, {}, {}, d1);
    write_document_outputs(run("doc_a.txt"), {}, {}, d2);
    CHECK(files.size() == 12);
    for (const auto& f : files) CHECK(slurp(f) == slurp(d2 / f.filename()));

    const auto freq = slurp(d1 / "doc_a_frequency.svg");
    const auto csv = slurp(d1 / "doc_a_word_sentiment_counts.csv");
    std::set<std::string> plotted;
    for (auto pos = freq.find("data-row=\""); pos != std::string::npos; pos = freq.find("data-row=\"", pos + 1)) {
        const auto e = freq.find('>', pos);
        const auto el = freq.substr(pos, e - pos);
        auto get = [&](const std::string& key) {
            const auto s = el.find(key + "=\"") + key.size() + 2;
            return el.substr(s, el.find('"', s) - s);
        };
        plotted.insert(get("data-row") + "," + get("data-sentiment") + "," + get("data-value"));
    }
    CHECK_FALSE(plotted.empty());
    for (const auto& row : plotted) CHECK(csv.find(row + "\n") != std::string::npos);

    OutputOptions only_csv;
    only_csv.format = OutputFormat::csv;
    const auto d3 = fresh_dir("csv");
    for (const auto& f : write_document_outputs(report, {}, only_csv, d3)) CHECK(f.extension() == ".csv");
    for (const auto& d : {d1, d2, d3}) fs::remove_all(d);
}

TEST_CASE("comparison puts the positive document above the negative one") {
    const auto a = run("doc_a.txt");
    const auto b = run("doc_b.txt");
    const auto j = nlohmann::ordered_json::parse(comparison_json(a, b, {}));
    CHECK(j["documents"] == nlohmann::json({"doc_a", "doc_b"}));
    CHECK(j["distribution"]["rows"].size() == 10);
    CHECK(j["score_curves"]["a"]["rows"].size() == 80);
    const auto& grid = j["shared_score_grid"];
    CHECK(grid["status"] == "ok");
    REQUIRE(grid["rows"].size() == 80);
    for (const auto& row : grid["rows"]) CHECK(row[1].get<double>() > row[2].get<double>());
}

TEST_CASE("output format parsing") {
    CHECK(parse_output_format("svg") == OutputFormat::svg);
    CHECK(parse_output_format("all") == OutputFormat::all);
    CHECK_THROWS_AS(parse_output_format("png"), Error);
}
