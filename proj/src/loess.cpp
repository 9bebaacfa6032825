#include "lexisent/loess.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "lexisent/error.hpp"

namespace lexisent {
namespace {

constexpr std::size_t kMaxTerms = 3;  // degree <= 2
constexpr double kPivotTolerance = 1e-10;
constexpr double kRidgeScale = 1e-12;
constexpr int kRefinementSteps = 3;

using Matrix = std::array<std::array<double, kMaxTerms>, kMaxTerms>;
using Vector = std::array<double, kMaxTerms>;

// In-place Cholesky of the leading p x p block. Returns false when a pivot
// falls below `min_pivot`.
bool cholesky(Matrix& a, std::size_t p, double min_pivot) {
    for (std::size_t j = 0; j < p; ++j) {
        double d = a[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= a[j][k] * a[j][k];
        if (!(d > min_pivot)) return false;
        a[j][j] = std::sqrt(d);
        for (std::size_t i = j + 1; i < p; ++i) {
            double s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
            a[i][j] = s / a[j][j];
        }
    }
    return true;
}

Vector cholesky_solve(const Matrix& l, std::size_t p, const Vector& b) {
    Vector z{};
    for (std::size_t i = 0; i < p; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l[i][k] * z[k];
        z[i] = s / l[i][i];
    }
    Vector x{};
    for (std::size_t i = p; i-- > 0;) {
        double s = z[i];
        for (std::size_t k = i + 1; k < p; ++k) s -= l[k][i] * x[k];
        x[i] = s / l[i][i];
    }
    return x;
}

// Solves the normal equations; on numerical singularity retries with a
// trace-scaled ridge and refines against the unregularized system.
Vector solve_normal_equations(const Matrix& a, const Vector& b, std::size_t p) {
    double max_diag = 0.0;
    double trace = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
        max_diag = std::max(max_diag, a[i][i]);
        trace += a[i][i];
    }
    Matrix l = a;
    if (cholesky(l, p, kPivotTolerance * max_diag)) return cholesky_solve(l, p, b);

    const double ridge = kRidgeScale * trace;
    l = a;
    for (std::size_t i = 0; i < p; ++i) l[i][i] += ridge;
    if (!(ridge > 0.0) || !cholesky(l, p, 0.0)) {
        throw DegenerateNeighborhood("local normal equations singular after regularization");
    }
    Vector beta = cholesky_solve(l, p, b);
    for (int step = 0; step < kRefinementSteps; ++step) {
        Vector r{};
        for (std::size_t i = 0; i < p; ++i) {
            r[i] = b[i];
            for (std::size_t k = 0; k < p; ++k) r[i] -= a[i][k] * beta[k];
        }
        const Vector delta = cholesky_solve(l, p, r);
        for (std::size_t i = 0; i < p; ++i) beta[i] += delta[i];
    }
    return beta;
}

double local_fit(std::span<const SeriesPoint> sorted, double x0, std::size_t q, int degree) {
    auto nbhd = local_neighborhood(sorted, x0, q, static_cast<std::size_t>(degree) + 1);
    const double d_max = nbhd.empty() ? 0.0 : nbhd.back().distance;
    const double scale = d_max > 0.0 ? d_max : 1.0;
    const bool all_zero =
        std::all_of(nbhd.begin(), nbhd.end(), [](const auto& n) { return n.weight == 0.0; });

    std::vector<double> support;
    for (const auto& n : nbhd) {
        if (all_zero || n.weight > 0.0) support.push_back(sorted[n.index].x);
    }
    std::sort(support.begin(), support.end());
    const auto distinct = static_cast<std::size_t>(
        std::unique(support.begin(), support.end()) - support.begin());
    const auto p = std::min(static_cast<std::size_t>(degree) + 1, distinct);
    Matrix a{};
    Vector b{};
    for (const auto& n : nbhd) {
        const double w = all_zero ? 1.0 : n.weight;
        if (w == 0.0) continue;
        const double t = (sorted[n.index].x - x0) / scale;
        std::array<double, 2 * kMaxTerms - 1> powers{};
        powers[0] = 1.0;
        for (std::size_t k = 1; k < 2 * p - 1; ++k) powers[k] = powers[k - 1] * t;
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) a[i][j] += w * powers[i + j];
            b[i] += w * powers[i] * sorted[n.index].y;
        }
    }
    return solve_normal_equations(a, b, p)[0];
}

std::vector<SeriesPoint> sorted_copy(std::span<const SeriesPoint> series) {
    std::vector<SeriesPoint> sorted(series.begin(), series.end());
    for (const auto& pt : sorted) {
        if (!std::isfinite(pt.x) || !std::isfinite(pt.y)) {
            throw std::invalid_argument("series contains a non-finite value");
        }
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& l, const auto& r) { return l.x < r.x; });
    return sorted;
}

std::size_t distinct_x(std::span<const SeriesPoint> sorted) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i == 0 || sorted[i].x != sorted[i - 1].x) ++count;
    }
    return count;
}

}  // namespace

double tricube_weight(double u) {
    if (u < 0.0) throw std::invalid_argument("tricube_weight: negative argument");
    if (u >= 1.0) return 0.0;
    const double c = 1.0 - u * u * u;
    return c * c * c;
}

std::size_t neighborhood_size(std::size_t n, const LoessConfig& config) {
    // The epsilon keeps products like 0.7 * 10 from rounding up to 8.
    const auto spanned =
        static_cast<std::size_t>(std::ceil(config.span * static_cast<double>(n) - 1e-9));
    const auto minimum = static_cast<std::size_t>(config.degree) + 2;
    return std::min(n, std::max(spanned, minimum));
}

std::vector<NeighborWeight> local_neighborhood(std::span<const SeriesPoint> sorted, double x0,
                                               std::size_t q, std::size_t support) {
    std::vector<NeighborWeight> all(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        all[i] = {i, std::abs(sorted[i].x - x0), 0.0};
    }
    std::sort(all.begin(), all.end(), [&](const NeighborWeight& l, const NeighborWeight& r) {
        if (l.distance != r.distance) return l.distance < r.distance;
        if (sorted[l.index].x != sorted[r.index].x) return sorted[l.index].x < sorted[r.index].x;
        return l.index < r.index;
    });
    q = std::min(q, all.size());
    if (q == 0) return {};

    // Widen past the q-th point until `support` distinct x lie strictly inside.
    std::size_t last = q - 1;
    std::set<double> inside;
    std::size_t j = 0;
    for (std::size_t k = q - 1; k < all.size(); ++k) {
        while (j < all.size() && all[j].distance < all[k].distance) inside.insert(sorted[all[j++].index].x);
        if (inside.size() >= support) {
            last = k;
            break;
        }
    }
    all.resize(last + 1);
    const double d_max = all.back().distance;
    for (auto& n : all) n.weight = d_max > 0.0 ? tricube_weight(n.distance / d_max) : 1.0;
    return all;
}

void validate(const LoessConfig& config) {
    if (!(config.span > 0.0 && config.span <= 1.0)) {
        throw std::invalid_argument("span must lie in (0, 1], got " + std::to_string(config.span));
    }
    if (config.degree != 1 && config.degree != 2) {
        throw std::invalid_argument("degree must be 1 or 2, got " +
                                    std::to_string(config.degree));
    }
    if (config.grid_points < 2) throw std::invalid_argument("grid_points must be at least 2");
}

std::vector<double> loess_evaluate(std::span<const SeriesPoint> series, const LoessConfig& config,
                                   std::span<const double> at) {
    validate(config);
    const auto sorted = sorted_copy(series);
    const auto needed = static_cast<std::size_t>(config.degree) + 2;
    if (const auto distinct = distinct_x(sorted); distinct < needed) {
        throw InsufficientData("loess needs at least " + std::to_string(needed) +
                               " distinct x values, got " + std::to_string(distinct));
    }
    const auto q = neighborhood_size(sorted.size(), config);
    std::vector<double> out;
    out.reserve(at.size());
    for (double x0 : at) out.push_back(local_fit(sorted, x0, q, config.degree));
    return out;
}

SmoothedCurve loess_fit(std::span<const SeriesPoint> series, const LoessConfig& config) {
    validate(config);
    if (series.empty()) throw InsufficientData("loess needs a non-empty series");
    const auto [lo, hi] = std::minmax_element(
        series.begin(), series.end(), [](const auto& l, const auto& r) { return l.x < r.x; });
    const double x_min = lo->x;
    const double x_max = hi->x;
    std::vector<double> grid(config.grid_points);
    const double step = (x_max - x_min) / static_cast<double>(config.grid_points - 1);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = x_min + step * static_cast<double>(i);
    grid.back() = x_max;

    const auto fitted = loess_evaluate(series, config, grid);
    SmoothedCurve curve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) curve[i] = {grid[i], fitted[i]};
    return curve;
}

}  // namespace lexisent
