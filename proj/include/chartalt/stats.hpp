#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chartalt/chart_type.hpp"
#include "chartalt/figure_facts.hpp"

namespace chartalt {

enum class StatKind {
    num_pts,
    min,
    max,
    mean,
    median,
    std_dev,
    linear_fit,
    correlation,
    iqr,
    outliers,
    max_contour_center,
    min_contour_center,
    slice_percentages,
};

// Parses the user-facing stat name ("num_pts", "std", ...).
std::optional<StatKind> stat_kind_from_string(const std::string& name);
const char* stat_kind_name(StatKind k);

struct StatResult {
    StatKind kind = StatKind::mean;
    std::vector<double> values;     // one value for scalars; (slope, intercept)
                                    // for linear_fit; outlier values for outliers
    std::vector<double> locations;  // independent-axis coordinates (min/max: one;
                                    // outliers: one per value; contour centers: (x, y))
    std::vector<std::size_t> indices;  // ordinal positions of located points
};

struct TrendSummary {
    enum class Direction { increase, decrease, flat };
    enum class Stability { strict, general, fluctuating };

    Direction direction = Direction::flat;
    Stability stability = Stability::fluctuating;
    double peak_value = 0.0;
    double peak_location = 0.0;       // independent coordinate of the pivot extremum
    std::size_t peak_index = 0;       // ordinal position of the pivot
    std::optional<Stability> post_peak;  // shape after the pivot, when trending
    std::size_t direction_changes = 0;   // increasing -> decreasing transitions
    double overall_change = 0.0;         // last - first
};

// Per-series statistic. Locations are raw independent coordinates; the
// template layer resolves them to tick labels where appropriate.
// Throws InapplicableStatError when the kind cannot be computed for the
// series' shape.
StatResult compute_statistic(const SeriesFacts& series, StatKind kind);

// Ordinary least squares; throws DegenerateFitError when xs are constant.
std::pair<double, double> linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

// Pearson r in [-1, 1]; throws DegenerateFitError on zero variance.
double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b);

// Tukey fences for boxplot/strip series, per-axis z-score > 3 for scatter.
StatResult detect_outliers(const SeriesFacts& series, ChartType chart_type);

// Trend over the series' dependent values in independent-axis order. Throws
// InapplicableStatError for fewer than 2 points or an unordered axis (ties).
TrendSummary detect_trend(const SeriesFacts& series);
TrendSummary detect_trend_values(const std::vector<double>& values,
                                 const std::vector<double>& positions);

// Default L2 statistics per chart type, in caption order.
std::vector<StatKind> default_statistics(ChartType chart_type);

// Population standard deviation / interpolated quantiles, shared with the
// outlier rules.
double population_std(const std::vector<double>& v);
double quantile(const std::vector<double>& v, double q);

}  // namespace chartalt
