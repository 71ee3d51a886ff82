#include "chartalt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chartalt/errors.hpp"
#include "chartalt/stats_kernels.hpp"

namespace chartalt {

namespace {

// Dependent values of a 1-D series: y unless the dependent axis is x.
const std::vector<double>& dependent(const SeriesFacts& s) {
    return s.value_axis == ValueAxis::x ? s.x_values : s.y_values;
}

// Independent coordinates aligned with dependent(); for horizontal series
// the roles swap.
const std::vector<double>& independent(const SeriesFacts& s) {
    return s.value_axis == ValueAxis::x ? s.y_values : s.x_values;
}

void require_values(const SeriesFacts& s, StatKind kind, std::size_t min_count = 1) {
    if (s.z_values) return;
    if (dependent(s).size() < min_count) {
        throw InapplicableStatError(std::string(stat_kind_name(kind)) + " needs at least " +
                                    std::to_string(min_count) + " values");
    }
}

std::vector<double> flatten_grid(const std::vector<std::vector<double>>& z) {
    std::vector<double> flat;
    for (const auto& col : z) flat.insert(flat.end(), col.begin(), col.end());
    return flat;
}

// Scans z[ix][iy] in storage order and reports the first extremum cell.
void grid_extremum(const std::vector<std::vector<double>>& z, bool want_max, double& value,
                   std::size_t& ix_out, std::size_t& iy_out) {
    bool first = true;
    for (std::size_t ix = 0; ix < z.size(); ++ix) {
        for (std::size_t iy = 0; iy < z[ix].size(); ++iy) {
            const double v = z[ix][iy];
            if (first || (want_max ? v > value : v < value)) {
                value = v;
                ix_out = ix;
                iy_out = iy;
                first = false;
            }
        }
    }
    if (first) throw InapplicableStatError("empty grid");
}

StatResult grid_stat(const SeriesFacts& s, StatKind kind) {
    const auto& z = *s.z_values;
    StatResult r;
    r.kind = kind;
    if (kind == StatKind::mean) {
        const auto flat = flatten_grid(z);
        if (flat.empty()) throw InapplicableStatError("empty grid");
        r.values = {kernels::mean(flat)};
        return r;
    }
    double value = 0.0;
    std::size_t ix = 0, iy = 0;
    grid_extremum(z, kind == StatKind::max, value, ix, iy);
    r.values = {value};
    const double cx = ix < s.x_values.size() ? s.x_values[ix] : static_cast<double>(ix);
    const double cy = iy < s.y_values.size() ? s.y_values[iy] : static_cast<double>(iy);
    r.locations = {cx, cy};
    r.indices = {ix, iy};
    return r;
}

TrendSummary::Stability segment_stability(const std::vector<double>& diffs, std::size_t lo,
                                          std::size_t hi, bool positive) {
    // Stability over diffs[lo, hi): strict = every nonzero difference has the
    // segment sign; general = at least 75%.
    std::size_t agree = 0, total = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        if (diffs[i] == 0.0) continue;
        ++total;
        if ((diffs[i] > 0.0) == positive) ++agree;
    }
    if (total == 0) return TrendSummary::Stability::strict;
    if (agree == total) return TrendSummary::Stability::strict;
    if (4 * agree >= 3 * total) return TrendSummary::Stability::general;
    return TrendSummary::Stability::fluctuating;
}

}  // namespace

std::optional<StatKind> stat_kind_from_string(const std::string& name) {
    if (name == "num_pts") return StatKind::num_pts;
    if (name == "min") return StatKind::min;
    if (name == "max") return StatKind::max;
    if (name == "mean") return StatKind::mean;
    if (name == "median") return StatKind::median;
    if (name == "std") return StatKind::std_dev;
    if (name == "linear_fit") return StatKind::linear_fit;
    if (name == "correlation") return StatKind::correlation;
    if (name == "iqr") return StatKind::iqr;
    if (name == "outliers") return StatKind::outliers;
    if (name == "max_contour_center") return StatKind::max_contour_center;
    if (name == "min_contour_center") return StatKind::min_contour_center;
    if (name == "slice_percentages") return StatKind::slice_percentages;
    return std::nullopt;
}

const char* stat_kind_name(StatKind k) {
    switch (k) {
        case StatKind::num_pts: return "num_pts";
        case StatKind::min: return "min";
        case StatKind::max: return "max";
        case StatKind::mean: return "mean";
        case StatKind::median: return "median";
        case StatKind::std_dev: return "std";
        case StatKind::linear_fit: return "linear_fit";
        case StatKind::correlation: return "correlation";
        case StatKind::iqr: return "iqr";
        case StatKind::outliers: return "outliers";
        case StatKind::max_contour_center: return "max_contour_center";
        case StatKind::min_contour_center: return "min_contour_center";
        case StatKind::slice_percentages: return "slice_percentages";
    }
    return "?";
}

double population_std(const std::vector<double>& v) {
    return std::sqrt(kernels::variance(v));
}

double quantile(const std::vector<double>& v, double q) {
    if (v.empty()) throw InapplicableStatError("quantile of empty series");
    return kernels::quantile(v, q);
}

StatResult compute_statistic(const SeriesFacts& series, StatKind kind) {
    StatResult r;
    r.kind = kind;

    switch (kind) {
        case StatKind::num_pts: {
            if (series.z_values) {
                std::size_t n = 0;
                for (const auto& col : *series.z_values) n += col.size();
                r.values = {static_cast<double>(n)};
            } else {
                r.values = {static_cast<double>(dependent(series).size())};
            }
            return r;
        }
        case StatKind::min:
        case StatKind::max: {
            if (series.z_values) return grid_stat(series, kind);
            require_values(series, kind);
            const auto& dep = dependent(series);
            const auto mm = kernels::min_max(dep);
            const std::size_t idx = kind == StatKind::min ? mm.argmin : mm.argmax;
            r.values = {kind == StatKind::min ? mm.min : mm.max};
            const auto& ind = independent(series);
            r.locations = {idx < ind.size() ? ind[idx] : static_cast<double>(idx)};
            r.indices = {idx};
            return r;
        }
        case StatKind::mean: {
            if (series.z_values) return grid_stat(series, kind);
            require_values(series, kind);
            r.values = {kernels::mean(dependent(series))};
            return r;
        }
        case StatKind::median: {
            require_values(series, kind);
            r.values = {quantile(dependent(series), 0.5)};
            return r;
        }
        case StatKind::std_dev: {
            require_values(series, kind);
            r.values = {population_std(dependent(series))};
            return r;
        }
        case StatKind::iqr: {
            require_values(series, kind);
            const auto& dep = dependent(series);
            r.values = {quantile(dep, 0.75) - quantile(dep, 0.25)};
            return r;
        }
        case StatKind::linear_fit: {
            const auto& ind = independent(series);
            const auto& dep = dependent(series);
            if (ind.size() != dep.size() || ind.size() < 2) {
                throw InapplicableStatError("linear_fit needs paired coordinates");
            }
            const auto [slope, intercept] = linear_fit(ind, dep);
            r.values = {slope, intercept};
            return r;
        }
        case StatKind::correlation:
            throw InapplicableStatError("correlation needs two series");
        case StatKind::outliers:
            return detect_outliers(series, ChartType::boxplot);
        case StatKind::max_contour_center:
        case StatKind::min_contour_center: {
            // Centroid of the contour path's vertices; callers pass the
            // extreme-level path series.
            if (!series.contour_level || series.x_values.empty()) {
                throw InapplicableStatError("contour center needs a contour path");
            }
            r.values = {*series.contour_level};
            r.locations = {kernels::mean(series.x_values), kernels::mean(series.y_values)};
            return r;
        }
        case StatKind::slice_percentages: {
            require_values(series, kind);
            const auto& dep = dependent(series);
            const double total = kernels::sum(dep);
            if (total == 0.0) throw InapplicableStatError("slice percentages of zero total");
            for (double v : dep) r.values.push_back(v / total * 100.0);
            return r;
        }
    }
    throw InapplicableStatError("unsupported stat kind");
}

std::pair<double, double> linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw InapplicableStatError("linear fit needs at least two paired points");
    }
    const double mx = kernels::mean(xs);
    const double my = kernels::mean(ys);
    const double sxx = kernels::dot_deviations(xs, mx, xs, mx);
    if (sxx == 0.0) throw DegenerateFitError("constant x values");
    const double sxy = kernels::dot_deviations(xs, mx, ys, my);
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw InapplicableStatError("correlation needs equal-length series of at least 2");
    }
    const double ma = kernels::mean(a);
    const double mb = kernels::mean(b);
    const double saa = kernels::dot_deviations(a, ma, a, ma);
    const double sbb = kernels::dot_deviations(b, mb, b, mb);
    if (saa == 0.0 || sbb == 0.0) throw DegenerateFitError("zero variance");
    const double sab = kernels::dot_deviations(a, ma, b, mb);
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

StatResult detect_outliers(const SeriesFacts& series, ChartType chart_type) {
    StatResult r;
    r.kind = StatKind::outliers;

    if (chart_type == ChartType::scatter) {
        // A point is an outlier when its per-axis z-score exceeds 3 in
        // either dimension (population std).
        const auto& xs = series.x_values;
        const auto& ys = series.y_values;
        if (xs.size() != ys.size() || xs.size() < 4) return r;
        const double mx = kernels::mean(xs), my = kernels::mean(ys);
        const double sx = population_std(xs), sy = population_std(ys);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const bool out_x = sx > 0 && std::fabs(xs[i] - mx) > 3.0 * sx;
            const bool out_y = sy > 0 && std::fabs(ys[i] - my) > 3.0 * sy;
            if (out_x || out_y) {
                r.values.push_back(ys[i]);
                r.locations.push_back(xs[i]);
                r.indices.push_back(i);
            }
        }
        return r;
    }

    // Tukey fences with interpolated quantiles.
    const auto& dep = dependent(series);
    if (dep.size() < 4) return r;
    const double q1 = quantile(dep, 0.25);
    const double q3 = quantile(dep, 0.75);
    const double iqr = q3 - q1;
    const double lo = q1 - 1.5 * iqr;
    const double hi = q3 + 1.5 * iqr;
    const auto& ind = independent(series);
    for (std::size_t i : kernels::indices_outside(dep, lo, hi)) {
        r.values.push_back(dep[i]);
        r.locations.push_back(i < ind.size() ? ind[i] : static_cast<double>(i));
        r.indices.push_back(i);
    }
    return r;
}

TrendSummary detect_trend_values(const std::vector<double>& values,
                                 const std::vector<double>& positions) {
    if (values.size() < 2) throw InapplicableStatError("trend needs at least 2 points");
    if (positions.size() != values.size()) throw InapplicableStatError("trend needs paired coordinates");

    // Order by the independent axis; ties make the axis unordered.
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (positions[order[i]] == positions[order[i + 1]]) {
            throw InapplicableStatError("independent axis is not strictly ordered");
        }
    }
    std::vector<double> v(values.size()), p(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        v[i] = values[order[i]];
        p[i] = positions[order[i]];
    }

    const auto diffs = kernels::first_differences(v);
    TrendSummary t;
    t.overall_change = v.back() - v.front();
    t.direction_changes = kernels::inc_to_dec_transitions(diffs);

    bool all_zero = true;
    for (double d : diffs) {
        if (d != 0.0) all_zero = false;
    }
    if (all_zero) {
        t.direction = TrendSummary::Direction::flat;
        t.stability = TrendSummary::Stability::strict;
        t.peak_value = v.front();
        t.peak_location = p.front();
        t.peak_index = 0;
        return t;
    }

    const auto mm = kernels::min_max(v);

    // Rise to the global max first; if the pre-peak segment does not trend,
    // try the fall to the global min instead.
    const auto pre_max = segment_stability(diffs, 0, mm.argmax, true);
    if (mm.argmax > 0 && pre_max != TrendSummary::Stability::fluctuating) {
        t.direction = TrendSummary::Direction::increase;
        t.stability = pre_max;
        t.peak_value = mm.max;
        t.peak_location = p[mm.argmax];
        t.peak_index = mm.argmax;
        if (mm.argmax + 1 < v.size()) {
            const auto post = segment_stability(diffs, mm.argmax, diffs.size(), false);
            if (post != TrendSummary::Stability::fluctuating) t.post_peak = post;
        }
        return t;
    }
    const auto pre_min = segment_stability(diffs, 0, mm.argmin, false);
    if (mm.argmin > 0 && pre_min != TrendSummary::Stability::fluctuating) {
        t.direction = TrendSummary::Direction::decrease;
        t.stability = pre_min;
        t.peak_value = mm.min;
        t.peak_location = p[mm.argmin];
        t.peak_index = mm.argmin;
        if (mm.argmin + 1 < v.size()) {
            const auto post = segment_stability(diffs, mm.argmin, diffs.size(), true);
            if (post != TrendSummary::Stability::fluctuating) t.post_peak = post;
        }
        return t;
    }

    t.direction = t.overall_change >= 0 ? TrendSummary::Direction::increase
                                        : TrendSummary::Direction::decrease;
    t.stability = TrendSummary::Stability::fluctuating;
    t.peak_value = mm.max;
    t.peak_location = p[mm.argmax];
    t.peak_index = mm.argmax;
    return t;
}

TrendSummary detect_trend(const SeriesFacts& series) {
    if (series.z_values) throw InapplicableStatError("trend needs one-dimensional data");
    return detect_trend_values(dependent(series), independent(series));
}

std::vector<StatKind> default_statistics(ChartType chart_type) {
    switch (chart_type) {
        case ChartType::scatter:
            return {StatKind::num_pts, StatKind::mean, StatKind::linear_fit, StatKind::outliers};
        case ChartType::boxplot:
            return {StatKind::median, StatKind::iqr, StatKind::outliers};
        case ChartType::contour:
            return {StatKind::max_contour_center};
        case ChartType::strip:
            return {StatKind::num_pts, StatKind::median, StatKind::outliers};
        case ChartType::pie:
            // The slice listing itself is part of the L1 description.
            return {StatKind::std_dev, StatKind::mean, StatKind::max, StatKind::min};
        case ChartType::heatmap:
        case ChartType::image:
        case ChartType::line:
        case ChartType::bar:
        case ChartType::radial_line:
        case ChartType::unknown:
            return {StatKind::min, StatKind::max, StatKind::mean};
        case ChartType::blank:
            return {};
    }
    return {};
}

}  // namespace chartalt
