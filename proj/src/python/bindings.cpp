#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <utility>
#include <vector>

#include "lexisent/error.hpp"
#include "lexisent/pipeline.hpp"
#include "lexisent/render.hpp"
#include "lexisent/report.hpp"

namespace py = pybind11;
using namespace lexisent;

namespace {

AnalysisOptions make_options(const std::vector<std::string>& custom_stopwords, std::size_t min_count,
                             double span, int degree, std::size_t grid_points,
                             const std::string& paragraph_mode,
                             const std::optional<std::filesystem::path>& stopwords) {
    AnalysisOptions opts;
    if (stopwords) {
        opts.stop_words = load_stop_words(*stopwords);
        opts.stop_words_source = stopwords->filename().string();
    }
    opts.custom_stop_words = custom_stopwords;
    opts.min_count = min_count;
    opts.loess = {span, degree, grid_points};
    opts.paragraph_mode = parse_paragraph_mode(paragraph_mode);
    return opts;
}

std::vector<std::pair<std::size_t, std::string>> token_pairs(const TokenTable& tokens) {
    std::vector<std::pair<std::size_t, std::string>> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.emplace_back(t.line, t.word);
    return out;
}

}  // namespace

PYBIND11_MODULE(_lexisent, m) {
    m.doc() = "Lexicon-based sentiment analysis core";

    py::register_exception<Error>(m, "LexisentError", PyExc_RuntimeError);
    py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_ValueError);

    m.def("tokenize_text", &tokenize_text, py::arg("text"));
    m.def(
        "tokenize",
        [](const std::string& text, const std::string& mode) {
            return token_pairs(tokenize(parse_document(text, "<text>", parse_paragraph_mode(mode))));
        },
        py::arg("text"), py::arg("paragraph_mode") = "line",
        "(line, word) pairs for a document given as text");
    m.def(
        "paragraphs",
        [](const std::string& text, const std::string& mode) {
            return parse_document(text, "<text>", parse_paragraph_mode(mode)).paragraphs();
        },
        py::arg("text"), py::arg("paragraph_mode") = "line");
    m.def(
        "is_stop_word", [](const std::string& word) { return default_stop_words().contains(word); },
        py::arg("word"));

    m.def("tricube", &tricube_weight, py::arg("u"));
    m.def(
        "loess",
        [](const std::vector<double>& x, const std::vector<double>& y, double span, int degree,
           std::size_t grid_points) {
            if (x.size() != y.size()) throw py::value_error("x and y differ in length");
            std::vector<SeriesPoint> series;
            for (std::size_t i = 0; i < x.size(); ++i) series.push_back({x[i], y[i]});
            std::vector<std::pair<double, double>> out;
            for (const auto& p : loess_fit(series, {span, degree, grid_points})) out.emplace_back(p.x, p.y_hat);
            return out;
        },
        py::arg("x"), py::arg("y"), py::arg("span") = 0.2, py::arg("degree") = 2,
        py::arg("grid_points") = 80, "Grid of (x, fitted) pairs");

    m.def(
        "analyze",
        [](const std::filesystem::path& input, const std::filesystem::path& nrc,
           const std::filesystem::path& bing, const std::vector<std::string>& custom_stopwords,
           std::size_t min_count, double span, int degree, std::size_t grid_points,
           const std::string& paragraph_mode, const std::optional<std::filesystem::path>& stopwords,
           const std::optional<std::filesystem::path>& out_dir) {
            const auto opts = make_options(custom_stopwords, min_count, span, degree, grid_points,
                                           paragraph_mode, stopwords);
            OutputOptions output;
            output.nrc_source = nrc.filename().string();
            output.bing_source = bing.filename().string();
            std::string json;
            {
                py::gil_scoped_release release;
                const auto report = analyze_document(load_document(input, opts.paragraph_mode),
                                                     load_nrc(nrc), load_bing(bing), opts);
                if (out_dir) write_document_outputs(report, opts, output, *out_dir);
                json = results_json(report, opts, output);
            }
            return json;
        },
        py::arg("input"), py::arg("nrc"), py::arg("bing"),
        py::arg("custom_stopwords") = std::vector<std::string>{}, py::arg("min_count") = 3,
        py::arg("span") = 0.2, py::arg("degree") = 2, py::arg("grid_points") = 80,
        py::arg("paragraph_mode") = "line", py::arg("stopwords") = py::none(),
        py::arg("out_dir") = py::none(),
        "Runs the full pipeline and returns the results document as JSON text");

    m.def("check_results", &check_results_json, py::arg("json_text"),
          "Conservation violations found in a results document");
}
