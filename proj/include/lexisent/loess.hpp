#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lexisent {

struct SeriesPoint {
    double x;
    double y;
};

struct LoessConfig {
    double span = 0.2;            ///< fraction of points in each neighborhood, (0, 1]
    int degree = 2;               ///< local polynomial degree, 1 or 2
    std::size_t grid_points = 80;  ///< evaluation grid size, >= 2
};

struct CurvePoint {
    double x;
    double y_hat;
};

using SmoothedCurve = std::vector<CurvePoint>;

/// (1 - u^3)^3 on [0, 1), zero beyond.
double tricube_weight(double u);

/// Number of neighbors used per local fit: max(ceil(span * n), degree + 2), capped at n.
std::size_t neighborhood_size(std::size_t n, const LoessConfig& config);

struct NeighborWeight {
    std::size_t index;  ///< position in the x-sorted series
    double distance;
    double weight;
};

/// The q nearest points to x0 in an x-sorted series, with tricube weights
/// relative to the farthest of them. Ties in distance go to the smaller x, then
/// to the earlier position. When fewer than `support` distinct x values lie
/// strictly inside that radius, the neighborhood grows until they do.
std::vector<NeighborWeight> local_neighborhood(std::span<const SeriesPoint> sorted, double x0,
                                               std::size_t q, std::size_t support = 1);

/// Throws std::invalid_argument for an out-of-range config.
void validate(const LoessConfig& config);

/// Evaluates the local fit at arbitrary points. A local fit whose positively
/// weighted points carry fewer than degree + 1 distinct x values drops to the
/// highest degree they support. Throws InsufficientData when the
/// series has fewer than degree + 2 distinct x values.
std::vector<double> loess_evaluate(std::span<const SeriesPoint> series, const LoessConfig& config,
                                   std::span<const double> at);

/// Evaluates on `grid_points` equally spaced x spanning [min x, max x].
SmoothedCurve loess_fit(std::span<const SeriesPoint> series, const LoessConfig& config);

}  // namespace lexisent
