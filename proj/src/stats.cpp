#include "outbreak/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace outbreak {

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) {
        throw std::invalid_argument("quantile of an empty sample");
    }
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxplotStats boxplot_stats(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("boxplot of an empty sample");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    BoxplotStats stats;
    stats.min = sorted.front();
    stats.max = sorted.back();
    stats.q1 = quantile_sorted(sorted, 0.25);
    stats.median = quantile_sorted(sorted, 0.5);
    stats.q3 = quantile_sorted(sorted, 0.75);
    stats.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());

    const double reach = 1.5 * (stats.q3 - stats.q1);
    const double low_fence = stats.q1 - reach;
    const double high_fence = stats.q3 + reach;
    stats.whisker_low = *std::lower_bound(sorted.begin(), sorted.end(), low_fence);
    stats.whisker_high = *std::prev(std::upper_bound(sorted.begin(), sorted.end(), high_fence));
    for (double v : sorted) {
        if (v < low_fence || v > high_fence) {
            stats.outliers.push_back(v);
        }
    }
    return stats;
}

WelchResult welch_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("Welch test needs at least two observations per sample");
    }
    auto moments = [](std::span<const double> xs) {
        const double n = static_cast<double>(xs.size());
        const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
        double ss = 0.0;
        for (double x : xs) {
            ss += (x - mean) * (x - mean);
        }
        return std::pair{mean, ss / (n - 1.0)};
    };
    const auto [mean_a, var_a] = moments(a);
    const auto [mean_b, var_b] = moments(b);
    const double se_a = var_a / static_cast<double>(a.size());
    const double se_b = var_b / static_cast<double>(b.size());
    const double se = se_a + se_b;

    WelchResult result;
    if (se == 0.0) {
        // Both samples constant.
        result.t = mean_a == mean_b ? 0.0 : std::copysign(INFINITY, mean_a - mean_b);
        result.degrees_of_freedom = static_cast<double>(a.size() + b.size() - 2);
        result.p_greater = mean_a > mean_b ? 0.0 : (mean_a == mean_b ? 0.5 : 1.0);
        return result;
    }
    result.t = (mean_a - mean_b) / std::sqrt(se);
    result.degrees_of_freedom =
        se * se / (se_a * se_a / static_cast<double>(a.size() - 1) +
                   se_b * se_b / static_cast<double>(b.size() - 1));
    const boost::math::students_t dist(result.degrees_of_freedom);
    result.p_greater = boost::math::cdf(boost::math::complement(dist, result.t));
    return result;
}

}  // namespace outbreak
