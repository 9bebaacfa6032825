#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexisent/error.hpp"
#include "lexisent/lexicon.hpp"
#include "lexisent/pipeline.hpp"
#include "lexisent/report.hpp"

namespace fs = std::filesystem;
using namespace lexisent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

struct RunConfig {
    std::string input;
    std::string input_b;
    std::string nrc;
    std::string bing;
    std::string stopwords;
    std::vector<std::string> custom_stopwords;
    std::size_t min_count = 3;
    double span = 0.2;
    int degree = 2;
    std::size_t grid_points = 80;
    std::string paragraph_mode = "line";
    std::string out_dir = "lexisent_out";
    std::string format = "all";
    bool check = false;
};

struct Loaded {
    NrcLexicon nrc;
    BingLexicon bing;
    AnalysisOptions analysis;
    OutputOptions output;
};

struct DocumentRun {
    std::optional<DocumentReport> report;
    std::string error;
    std::vector<std::string> violations;
};

const CLI::Validator kUnitSpan(
    [](std::string& value) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(value, v) || !(v > 0.0 && v <= 1.0)) {
            return "span must lie in (0, 1], got " + value;
        }
        return {};
    },
    "(0, 1]");

void add_common(CLI::App& cmd, RunConfig& cfg) {
    cmd.add_option("--input", cfg.input, "Plain-text document")->required();
    cmd.add_option("--nrc", cfg.nrc, "NRC emotion lexicon (word<TAB>category<TAB>flag)")->required();
    cmd.add_option("--bing", cfg.bing, "Bing polarity lexicon (word<TAB>polarity)")->required();
    cmd.add_option("--stopwords", cfg.stopwords, "Stop-word file, one word per line (default: built-in list)");
    cmd.add_option("--custom-stopword", cfg.custom_stopwords, "Extra stop word (repeatable)")
        ->allow_extra_args(false);
    cmd.add_option("--min-count", cfg.min_count, "Frequency chart keeps words with n >= this")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--span", cfg.span, "LOESS span in (0, 1]")
        ->check(kUnitSpan)
        ->capture_default_str();
    cmd.add_option("--degree", cfg.degree, "LOESS local polynomial degree")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    cmd.add_option("--grid-points", cfg.grid_points, "LOESS evaluation grid size")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
        ->capture_default_str();
    cmd.add_option("--paragraph-mode", cfg.paragraph_mode, "Paragraph segmentation")
        ->check(CLI::IsMember({"line", "blank-line"}))
        ->capture_default_str();
    cmd.add_option("--out-dir", cfg.out_dir, "Output directory")->capture_default_str();
    cmd.add_option("--format", cfg.format, "Artifacts to write")
        ->check(CLI::IsMember({"svg", "csv", "json", "all"}))
        ->capture_default_str();
    cmd.add_flag("--check", cfg.check, "Recompute conservation invariants; exit 2 on violation");
}

Loaded load_shared(const RunConfig& cfg) {
    Loaded l{load_nrc(cfg.nrc), load_bing(cfg.bing), {}, {}};
    if (!cfg.stopwords.empty()) {
        l.analysis.stop_words = load_stop_words(cfg.stopwords);
        l.analysis.stop_words_source = fs::path(cfg.stopwords).filename().string();
    }
    l.analysis.custom_stop_words = cfg.custom_stopwords;
    l.analysis.min_count = cfg.min_count;
    l.analysis.loess = {cfg.span, cfg.degree, cfg.grid_points};
    l.analysis.paragraph_mode = parse_paragraph_mode(cfg.paragraph_mode);
    validate(l.analysis.loess);
    l.output.format = parse_output_format(cfg.format);
    l.output.nrc_source = fs::path(cfg.nrc).filename().string();
    l.output.bing_source = fs::path(cfg.bing).filename().string();
    return l;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DocumentRun run_document(const std::string& input, const Loaded& l, const fs::path& out_dir,
                         bool check) {
    DocumentRun run;
    try {
        const auto doc = load_document(input, l.analysis.paragraph_mode);
        auto report = analyze_document(doc, l.nrc, l.bing, l.analysis);
        write_document_outputs(report, l.analysis, l.output, out_dir);
        if (check) {
            run.violations = check_report(report);
            const auto json_path = out_dir / "results.json";
            if (fs::exists(json_path)) {
                for (auto& v : check_results_json(slurp(json_path))) {
                    run.violations.push_back("results.json: " + v);
                }
            }
        }
        run.report = std::move(report);
    } catch (const std::exception& e) {
        run.error = e.what();
    }
    return run;
}

int finish(const std::string& label, const DocumentRun& run) {
    if (!run.report) {
        std::cerr << "error: " << label << ": " << run.error << "\n";
        return kExitInput;
    }
    for (const auto& w : run.report->warnings) std::cerr << "warning: " << label << ": " << w << "\n";
    for (const auto& v : run.violations) std::cerr << "invariant: " << label << ": " << v << "\n";
    return run.violations.empty() ? kExitOk : kExitInvariant;
}

int analyze(const RunConfig& cfg) {
    const auto shared = load_shared(cfg);
    const auto run = run_document(cfg.input, shared, cfg.out_dir, cfg.check);
    return finish(cfg.input, run);
}

int compare(const RunConfig& cfg) {
    const auto shared = load_shared(cfg);
    const fs::path root(cfg.out_dir);
    auto fa = std::async(std::launch::async, run_document, cfg.input, std::cref(shared),
                         root / "doc_a", cfg.check);
    auto fb = std::async(std::launch::async, run_document, cfg.input_b, std::cref(shared),
                         root / "doc_b", cfg.check);
    const auto ra = fa.get();
    const auto rb = fb.get();
    const int ca = finish(cfg.input, ra);
    const int cb = finish(cfg.input_b, rb);
    if (ca == kExitInput || cb == kExitInput) return kExitInput;

    std::ofstream out(root / "comparison.json", std::ios::binary | std::ios::trunc);
    out << comparison_json(*ra.report, *rb.report, shared.analysis.loess);
    if (!out) throw Error("cannot write " + (root / "comparison.json").string());
    return std::max(ca, cb);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicon-based sentiment analysis of plain-text documents"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one document");
    add_common(*analyze_cmd, cfg);
    auto* compare_cmd = app.add_subcommand("compare", "Analyze two documents side by side");
    add_common(*compare_cmd, cfg);
    compare_cmd->add_option("--input-b", cfg.input_b, "Second document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return analyze_cmd->parsed() ? analyze(cfg) : compare(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
