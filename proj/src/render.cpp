#include "lexisent/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "lexisent/error.hpp"

namespace lexisent {
namespace {

constexpr std::array<std::string_view, kCategoryCount> kPalette = {
    "#4daf4a",  // positive
    "#e41a1c",  // negative
    "#a50f15",  // anger
    "#6a3d9a",  // fear
    "#ff7f00",  // anticipation
    "#377eb8",  // trust
    "#f781bf",  // surprise
    "#999999",  // sadness
    "#ffd92f",  // joy
    "#8c564b",  // disgust
};

constexpr std::string_view kXmlDecl = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
constexpr std::string_view kFont = "sans-serif";
constexpr std::string_view kCurveColor = "#3366ff";

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string num(double v) {
    auto s = fmt::format("{:.2f}", v);
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string tick_label(double v, double step) {
    const int decimals = std::max(0, -static_cast<int>(std::floor(std::log10(step) + 1e-9)));
    auto s = fmt::format("{:.{}f}", v, decimals);
    if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

struct Box {
    double x, y, w, h;
};

struct Layout {
    double width, height;
    Box plot;
};

Layout make_layout(std::size_t width_px, std::size_t height_px, double left, double right) {
    const auto w = static_cast<double>(width_px);
    const auto h = static_cast<double>(height_px);
    constexpr double top = 40.0;
    constexpr double bottom = 50.0;
    const Box plot{left, top, std::max(1.0, w - left - right), std::max(1.0, h - top - bottom)};
    return {w, h, plot};
}

void open_document(std::string& out, const Layout& layout, std::string_view kind) {
    out += kXmlDecl;
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" class=\"chart\" data-kind=\"{2}\" font-family=\"{3}\">\n",
        num(layout.width), num(layout.height), kind, kFont);
    out += fmt::format(
        "<rect class=\"background\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
        num(layout.width), num(layout.height));
}

void draw_title(std::string& out, const Layout& layout, std::string_view title) {
    out += fmt::format(
        "<text class=\"title\" x=\"{}\" y=\"24\" font-size=\"15\" font-weight=\"bold\">{}</text>\n",
        num(layout.plot.x), escape(title));
}

void draw_frame(std::string& out, const Box& plot) {
    out += fmt::format(
        "<rect class=\"frame\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#f4f4f4\" "
        "stroke=\"#cccccc\"/>\n",
        num(plot.x), num(plot.y), num(plot.w), num(plot.h));
}

void draw_axis_labels(std::string& out, const Layout& layout, std::string_view x_label,
                      std::string_view y_label) {
    const Box& p = layout.plot;
    out += fmt::format(
        "<text class=\"axis-label x-label\" x=\"{}\" y=\"{}\" font-size=\"12\" "
        "text-anchor=\"middle\">{}</text>\n",
        num(p.x + p.w / 2), num(layout.height - 10), escape(x_label));
    out += fmt::format(
        "<text class=\"axis-label y-label\" x=\"14\" y=\"{0}\" font-size=\"12\" "
        "text-anchor=\"middle\" transform=\"rotate(-90 14 {0})\">{1}</text>\n",
        num(p.y + p.h / 2), escape(y_label));
}

// Vertical grid lines and labels for a horizontal value axis.
void draw_x_ticks(std::string& out, const Box& p, const std::vector<double>& ticks) {
    const double lo = ticks.front();
    const double hi = ticks.back();
    const double step = ticks.size() > 1 ? ticks[1] - ticks[0] : 1.0;
    out += "<g class=\"axis x-axis\">\n";
    for (double t : ticks) {
        const double x = p.x + (t - lo) / (hi - lo) * p.w;
        out += fmt::format(
            "<line class=\"tick\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#ffffff\"/>\n",
            num(x), num(p.y), num(p.y + p.h));
        out += fmt::format(
            "<text class=\"tick-label\" x=\"{}\" y=\"{}\" font-size=\"10\" "
            "text-anchor=\"middle\">{}</text>\n",
            num(x), num(p.y + p.h + 14), tick_label(t, step));
    }
    out += "</g>\n";
}

void draw_y_ticks(std::string& out, const Box& p, const std::vector<double>& ticks) {
    const double lo = ticks.front();
    const double hi = ticks.back();
    const double step = ticks.size() > 1 ? ticks[1] - ticks[0] : 1.0;
    out += "<g class=\"axis y-axis\">\n";
    for (double t : ticks) {
        const double y = p.y + p.h - (t - lo) / (hi - lo) * p.h;
        out += fmt::format(
            "<line class=\"tick\" x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#ffffff\"/>\n",
            num(p.x), num(y), num(p.x + p.w));
        out += fmt::format(
            "<text class=\"tick-label\" x=\"{}\" y=\"{}\" font-size=\"10\" "
            "text-anchor=\"end\">{}</text>\n",
            num(p.x - 4), num(y + 3), tick_label(t, step));
    }
    out += "</g>\n";
}

void draw_legend(std::string& out, const Layout& layout) {
    const double x = layout.plot.x + layout.plot.w + 12;
    const double y0 = layout.plot.y;
    out += "<g class=\"legend\">\n";
    out += fmt::format("<text class=\"legend-title\" x=\"{}\" y=\"{}\" font-size=\"11\">sentiment</text>\n",
                       num(x), num(y0 + 10));
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        const double y = y0 + 18 + 16 * static_cast<double>(i);
        out += fmt::format(
            "<rect class=\"legend-swatch\" x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"{}\"/>\n",
            num(x), num(y), kPalette[i]);
        out += fmt::format("<text class=\"legend-label\" x=\"{}\" y=\"{}\" font-size=\"10\">{}</text>\n",
                           num(x + 14), num(y + 9), to_string(kAllCategories[i]));
    }
    out += "</g>\n";
}

struct BarRow {
    std::string label;
    std::vector<std::pair<SentimentCategory, std::size_t>> segments;
    std::size_t total = 0;
};

// Horizontal bars from zero; each segment width is value / axis max of the plot width.
void draw_bars(std::string& out, const Layout& layout, const std::vector<BarRow>& rows) {
    const Box& p = layout.plot;
    std::size_t max_total = 0;
    for (const auto& r : rows) max_total = std::max(max_total, r.total);
    const auto ticks = nice_ticks(0.0, static_cast<double>(std::max<std::size_t>(max_total, 1)));
    const double axis_max = ticks.back();
    draw_x_ticks(out, p, ticks);

    const double band = p.h / static_cast<double>(rows.size());
    const double bar_h = band * 0.8;
    out += "<g class=\"bars\">\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const double y = p.y + band * static_cast<double>(i) + (band - bar_h) / 2;
        out += fmt::format(
            "<text class=\"row-label\" x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\">{}</text>\n",
            num(p.x - 4), num(y + bar_h / 2 + 3), escape(row.label));
        double x = p.x;
        for (const auto& [category, value] : row.segments) {
            const double w = static_cast<double>(value) / axis_max * p.w;
            out += fmt::format(
                "<rect class=\"bar\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" "
                "data-row=\"{}\" data-sentiment=\"{}\" data-value=\"{}\" data-axis-max=\"{}\"/>\n",
                num(x), num(y), num(w), num(bar_h), category_color(category), escape(row.label),
                to_string(category), value, tick_label(axis_max, 1.0));
            x += w;
        }
    }
    out += "</g>\n";
}

std::string render_stacked(const ChartSpec& spec, const std::vector<WordSentimentCount>& table,
                           std::size_t width_px, std::size_t height_px) {
    std::map<std::string, BarRow> by_word;
    for (const auto& r : table) {
        auto& row = by_word[r.word];
        row.label = r.word;
        row.segments.emplace_back(r.sentiment, r.n);
        row.total += r.n;
    }
    std::vector<BarRow> rows;
    for (auto& [word, row] : by_word) {
        std::sort(row.segments.begin(), row.segments.end());
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const BarRow& a, const BarRow& b) { return a.total > b.total; });

    const auto layout = make_layout(width_px, height_px, 110.0, 130.0);
    std::string out;
    open_document(out, layout, to_string(spec.kind));
    draw_title(out, layout, spec.title);
    draw_frame(out, layout.plot);
    draw_bars(out, layout, rows);
    draw_axis_labels(out, layout, spec.x_label, spec.y_label);
    draw_legend(out, layout);
    out += "</svg>\n";
    return out;
}

std::string render_plain(const ChartSpec& spec, const std::vector<DistributionRow>& table,
                         std::size_t width_px, std::size_t height_px) {
    std::vector<BarRow> rows;
    rows.reserve(table.size());
    for (const auto& r : table) {
        rows.push_back({std::string(to_string(r.sentiment)), {{r.sentiment, r.total}}, r.total});
    }
    const auto layout = make_layout(width_px, height_px, 110.0, 20.0);
    std::string out;
    open_document(out, layout, to_string(spec.kind));
    draw_title(out, layout, spec.title);
    draw_frame(out, layout.plot);
    draw_bars(out, layout, rows);
    draw_axis_labels(out, layout, spec.x_label, spec.y_label);
    out += "</svg>\n";
    return out;
}

std::string render_line(const ChartSpec& spec, const SmoothedCurve& curve, std::size_t width_px,
                        std::size_t height_px) {
    if (curve.size() < 2) throw std::invalid_argument("smooth_line needs at least 2 points");
    double x_lo = curve.front().x, x_hi = curve.front().x;
    double y_lo = curve.front().y_hat, y_hi = curve.front().y_hat;
    for (const auto& pt : curve) {
        if (!std::isfinite(pt.x) || !std::isfinite(pt.y_hat)) {
            throw std::invalid_argument("smooth_line contains a non-finite point");
        }
        x_lo = std::min(x_lo, pt.x);
        x_hi = std::max(x_hi, pt.x);
        y_lo = std::min(y_lo, pt.y_hat);
        y_hi = std::max(y_hi, pt.y_hat);
    }
    const auto x_ticks = nice_ticks(x_lo, x_hi);
    const auto y_ticks = nice_ticks(y_lo, y_hi);

    const auto layout = make_layout(width_px, height_px, 60.0, 20.0);
    const Box& p = layout.plot;
    std::string out;
    open_document(out, layout, to_string(spec.kind));
    draw_title(out, layout, spec.title);
    draw_frame(out, p);
    draw_x_ticks(out, p, x_ticks);
    draw_y_ticks(out, p, y_ticks);

    const double x0 = x_ticks.front(), x1 = x_ticks.back();
    const double y0 = y_ticks.front(), y1 = y_ticks.back();
    std::string points;
    for (const auto& pt : curve) {
        if (!points.empty()) points.push_back(' ');
        const double sx = p.x + (pt.x - x0) / (x1 - x0) * p.w;
        const double sy = p.y + p.h - (pt.y_hat - y0) / (y1 - y0) * p.h;
        points += num(sx) + "," + num(sy);
    }
    out += fmt::format(
        "<polyline class=\"curve\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n",
        kCurveColor, points);
    draw_axis_labels(out, layout, spec.x_label, spec.y_label);
    out += "</svg>\n";
    return out;
}

std::string_view strip_declaration(std::string_view svg) {
    if (svg.starts_with("<?xml")) {
        const auto end = svg.find("?>");
        svg.remove_prefix(end + 2);
        while (!svg.empty() && (svg.front() == '\n' || svg.front() == '\r')) svg.remove_prefix(1);
    }
    return svg;
}

}  // namespace

std::string_view to_string(ChartKind kind) {
    switch (kind) {
        case ChartKind::h_bar_stacked: return "h_bar_stacked";
        case ChartKind::h_bar_plain: return "h_bar_plain";
        case ChartKind::smooth_line: return "smooth_line";
    }
    return "unknown";
}

std::string_view category_color(SentimentCategory c) {
    return kPalette[static_cast<std::size_t>(c)];
}

std::vector<double> nice_ticks(double lo, double hi, std::size_t max_ticks) {
    if (max_ticks < 2) throw std::invalid_argument("nice_ticks needs max_ticks >= 2");
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    constexpr double kLadder[] = {1.0, 2.0, 5.0};
    const double raw = (hi - lo) / static_cast<double>(max_ticks - 1);
    int exponent = static_cast<int>(std::floor(std::log10(raw))) - 1;
    for (;; ++exponent) {
        for (double m : kLadder) {
            const double step = m * std::pow(10.0, exponent);
            const double first = std::floor(lo / step + 1e-9);
            const double last = std::ceil(hi / step - 1e-9);
            if (last - first + 1 <= static_cast<double>(max_ticks)) {
                std::vector<double> ticks;
                for (double k = first; k <= last; k += 1.0) ticks.push_back(k * step);
                return ticks;
            }
        }
    }
}

ChartSpec frequency_chart(std::vector<WordSentimentCount> rows) {
    return {"Common Words & Sentiments (Frequency)", "sentiment (n)", "word",
            ChartKind::h_bar_stacked, std::move(rows)};
}

ChartSpec distribution_chart(std::vector<DistributionRow> rows) {
    return {"Sentiments (Distribution)", "n", "sentiment", ChartKind::h_bar_plain,
            std::move(rows)};
}

ChartSpec conditional_mean_chart(SmoothedCurve curve) {
    return {"Intertemporal Use of Sentiments (Conditional Mean)", "document (line)",
            "sentiment (conditional mean)", ChartKind::smooth_line, std::move(curve)};
}

ChartSpec score_chart(SmoothedCurve curve) {
    return {"Intertemporal Use of Sentiments (Score)", "document (line)", "sentiment (score)",
            ChartKind::smooth_line, std::move(curve)};
}

std::string render_chart(const ChartSpec& spec, std::size_t width_px, std::size_t height_px) {
    if (spec.title.empty()) throw std::invalid_argument("chart title must not be empty");
    if (width_px == 0 || height_px == 0) throw std::invalid_argument("chart size must be positive");
    switch (spec.kind) {
        case ChartKind::h_bar_stacked: {
            const auto* rows = std::get_if<std::vector<WordSentimentCount>>(&spec.series);
            if (!rows) throw std::invalid_argument("h_bar_stacked expects word counts");
            if (rows->empty()) throw EmptySeries(spec.title + ": no rows to plot");
            return render_stacked(spec, *rows, width_px, height_px);
        }
        case ChartKind::h_bar_plain: {
            const auto* rows = std::get_if<std::vector<DistributionRow>>(&spec.series);
            if (!rows) throw std::invalid_argument("h_bar_plain expects distribution rows");
            if (rows->empty()) throw EmptySeries(spec.title + ": no rows to plot");
            return render_plain(spec, *rows, width_px, height_px);
        }
        case ChartKind::smooth_line: {
            const auto* curve = std::get_if<SmoothedCurve>(&spec.series);
            if (!curve) throw std::invalid_argument("smooth_line expects a smoothed curve");
            return render_line(spec, *curve, width_px, height_px);
        }
    }
    throw std::invalid_argument("unknown chart kind");
}

std::string render_placeholder(std::string_view title, std::string_view message,
                               std::size_t width_px, std::size_t height_px) {
    const auto layout = make_layout(width_px, height_px, 60.0, 20.0);
    std::string out;
    open_document(out, layout, "placeholder");
    draw_title(out, layout, title);
    draw_frame(out, layout.plot);
    out += fmt::format(
        "<text class=\"placeholder\" x=\"{}\" y=\"{}\" font-size=\"12\" "
        "text-anchor=\"middle\">{}</text>\n",
        num(layout.plot.x + layout.plot.w / 2), num(layout.plot.y + layout.plot.h / 2),
        escape(message));
    out += "</svg>\n";
    return out;
}

std::string compose_dashboard(const std::array<std::string, 4>& panel_svgs, std::size_t width_px,
                              std::size_t height_px) {
    const double w = static_cast<double>(width_px);
    const double h = static_cast<double>(height_px);
    const double cw = w / 2;
    const double ch = h / 2;
    std::string out(kXmlDecl);
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" class=\"dashboard\" font-family=\"{2}\">\n",
        num(w), num(h), kFont);
    out += fmt::format(
        "<rect class=\"background\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
        num(w), num(h));
    for (std::size_t i = 0; i < 4; ++i) {
        const double x = cw * static_cast<double>(i % 2);
        const double y = ch * static_cast<double>(i / 2);
        // Nested viewport scales the panel's own viewBox into the cell.
        auto inner = std::string(strip_declaration(panel_svgs[i]));
        const auto tag_end = inner.find("<svg") + 4;
        inner.insert(tag_end, fmt::format(" x=\"{}\" y=\"{}\"", num(x), num(y)));
        const auto open_end = inner.find('>');
        auto replace_attr = [&](std::string_view name, const std::string& value) {
            const auto key = fmt::format(" {}=\"", name);
            const auto pos = inner.find(key);
            if (pos == std::string::npos || pos > open_end) return;
            const auto vstart = pos + key.size();
            const auto vend = inner.find('"', vstart);
            inner.replace(vstart, vend - vstart, value);
        };
        replace_attr("width", num(cw));
        replace_attr("height", num(ch));
        out += fmt::format("<g class=\"panel\" data-panel=\"{}\">\n", i + 1);
        out += fmt::format(
            "<rect class=\"panel-frame\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
            "stroke=\"#dddddd\"/>\n",
            num(x), num(y), num(cw), num(ch));
        out += inner;
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render_dashboard(const Dashboard& dashboard, std::size_t width_px,
                             std::size_t height_px) {
    std::array<std::string, 4> panels;
    for (std::size_t i = 0; i < 4; ++i) {
        try {
            panels[i] = render_chart(dashboard.panels[i], width_px / 2, height_px / 2);
        } catch (const std::exception& e) {
            throw DashboardPanelError(i + 1, e.what());
        }
    }
    return compose_dashboard(panels, width_px, height_px);
}

}  // namespace lexisent
