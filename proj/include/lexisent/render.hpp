#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexisent/analysis.hpp"
#include "lexisent/lexicon.hpp"
#include "lexisent/loess.hpp"

namespace lexisent {

enum class ChartKind { h_bar_stacked, h_bar_plain, smooth_line };

std::string_view to_string(ChartKind kind);

using ChartPayload = std::variant<std::vector<WordSentimentCount>,  // h_bar_stacked
                                  std::vector<DistributionRow>,     // h_bar_plain
                                  SmoothedCurve>;                   // smooth_line

/// `x_label` names the horizontal axis and `y_label` the vertical one, as drawn.
struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    ChartKind kind = ChartKind::smooth_line;
    ChartPayload series;
};

struct Dashboard {
    std::array<ChartSpec, 4> panels;  ///< frequency, distribution, conditional mean, score
};

/// Fill color for each category, indexed in enumeration order.
std::string_view category_color(SentimentCategory c);

/// Round tick positions on the 1/2/5 x 10^k ladder covering [lo, hi]; at most `max_ticks`.
std::vector<double> nice_ticks(double lo, double hi, std::size_t max_ticks = 5);

ChartSpec frequency_chart(std::vector<WordSentimentCount> rows);
ChartSpec distribution_chart(std::vector<DistributionRow> rows);
ChartSpec conditional_mean_chart(SmoothedCurve curve);
ChartSpec score_chart(SmoothedCurve curve);

/// Standalone SVG 1.1 document. Throws EmptySeries for bar charts without rows
/// and std::invalid_argument for other malformed specs.
std::string render_chart(const ChartSpec& spec, std::size_t width_px, std::size_t height_px);

/// A titled chart frame stating that nothing could be plotted.
std::string render_placeholder(std::string_view title, std::string_view message,
                               std::size_t width_px, std::size_t height_px);

/// Arranges four rendered chart documents in a 2x2 grid, reading order.
std::string compose_dashboard(const std::array<std::string, 4>& panel_svgs, std::size_t width_px,
                              std::size_t height_px);

/// Renders each panel at cell size and composes. Panel failures are rethrown as
/// DashboardPanelError with the 1-based panel index.
std::string render_dashboard(const Dashboard& dashboard, std::size_t width_px,
                             std::size_t height_px);

}  // namespace lexisent
