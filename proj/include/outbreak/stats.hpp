#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace outbreak {

/// Quantile by linear interpolation between order statistics
/// (h = (n - 1) p). `sorted` must be ascending and nonempty.
double quantile_sorted(std::span<const double> sorted, double p);

struct BoxplotStats {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double mean = 0.0;
    /// Lowest datum within 1.5 IQR of q1, highest datum within 1.5 IQR of q3.
    double whisker_low = 0.0;
    double whisker_high = 0.0;
    std::vector<double> outliers;  // ascending
};

BoxplotStats boxplot_stats(std::span<const double> values);

struct WelchResult {
    double t = 0.0;
    double degrees_of_freedom = 0.0;
    /// P(T > t) under the null; small values mean the first sample's mean
    /// is significantly larger.
    double p_greater = 0.0;
};

/// Welch's unequal-variance t statistic for mean(a) - mean(b).
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace outbreak
