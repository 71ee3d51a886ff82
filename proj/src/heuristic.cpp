#include "chartalt/heuristic.hpp"

#include <algorithm>
#include <cmath>

#include "chartalt/errors.hpp"
#include "chartalt/stats_kernels.hpp"
#include "chartalt/text_format.hpp"

namespace chartalt {

namespace {

bool is_data_series(const SeriesFacts& s) { return !s.contour_level.has_value(); }

// 1-D data series of a subplot (grids included; contour paths excluded).
std::vector<const SeriesFacts*> data_series(const SubplotFacts& sp) {
    std::vector<const SeriesFacts*> out;
    for (const auto& s : sp.series) {
        if (is_data_series(s)) out.push_back(&s);
    }
    return out;
}

std::string bound_text(const AxisBound& b) {
    if (const double* v = std::get_if<double>(&b)) return format_number(*v);
    return lowercase(std::get<std::string>(b));
}

std::string chart_type_phrase(const SubplotFacts& sp, ChartType t) {
    switch (t) {
        case ChartType::line: return "a line plot";
        case ChartType::bar: return "a bar chart";
        case ChartType::scatter: return "a scatter plot";
        case ChartType::radial_line: return "a radial line plot";
        case ChartType::pie: return "a pie chart";
        case ChartType::strip: return "a strip plot";
        case ChartType::contour: return "a contour plot";
        case ChartType::heatmap:
        case ChartType::image: {
            std::string prefix = "a ";
            if (sp.marks.grid_shape) {
                prefix += std::to_string(sp.marks.grid_shape->first) + "x" +
                          std::to_string(sp.marks.grid_shape->second) + " ";
            }
            return prefix + (t == ChartType::heatmap ? "heatmap" : "image");
        }
        case ChartType::boxplot: return "a boxplot";
        case ChartType::blank: return "a blank plot";
        case ChartType::unknown: return "a plot";
    }
    return "a plot";
}

const AxisFacts* independent_axis(const SubplotFacts& sp, const SeriesFacts& s) {
    return sp.axis(s.value_axis == ValueAxis::x ? AxisName::y : AxisName::x);
}

char dep_letter(const SeriesFacts& s) {
    switch (s.value_axis) {
        case ValueAxis::x: return 'x';
        case ValueAxis::y: return 'y';
        case ValueAxis::z: return 'z';
    }
    return 'y';
}

char ind_letter(const SeriesFacts& s) { return s.value_axis == ValueAxis::x ? 'y' : 'x'; }

std::size_t series_length(const SeriesFacts& s) {
    return std::max(s.x_values.size(), s.y_values.size());
}

// Resolves an independent-axis location: tick label when a datetime or
// categorical axis maps one tick per point, 1-based ordinal on datetime axes
// otherwise, raw coordinate on numeric axes.
std::string resolve_location(const SubplotFacts& sp, const SeriesFacts& s, double raw,
                             std::size_t ordinal) {
    const AxisFacts* axis = independent_axis(sp, s);
    if (axis && (axis->scale == AxisScale::datetime || axis->scale == AxisScale::categorical)) {
        if (axis->tick_labels.size() == series_length(s) && ordinal < axis->tick_labels.size() &&
            !axis->tick_labels[ordinal].empty()) {
            return lowercase(axis->tick_labels[ordinal]);
        }
        return format_number(static_cast<double>(ordinal + 1));
    }
    return format_number(raw);
}

// Dependent values used for statistics: pie slices describe their
// percentage share, everything else its raw values.
std::vector<double> stat_values(const SeriesFacts& s, ChartType t) {
    const auto& dep = s.value_axis == ValueAxis::x ? s.x_values : s.y_values;
    if (t != ChartType::pie) return dep;
    double total = 0.0;
    for (double v : dep) total += v;
    if (total == 0.0) return dep;
    std::vector<double> pct;
    pct.reserve(dep.size());
    for (double v : dep) pct.push_back(v / total * 100.0);
    return pct;
}

// A working copy of the series with pie values converted to percentages (the
// percentage doubles as the independent coordinate, matching how pie trends
// and extrema are described).
SeriesFacts stat_series(const SeriesFacts& s, ChartType t) {
    if (t != ChartType::pie) return s;
    SeriesFacts out = s;
    out.y_values = stat_values(s, t);
    out.x_values = out.y_values;
    out.value_axis = ValueAxis::y;
    return out;
}

std::string fit_text(const SeriesFacts& s, double slope, double intercept) {
    std::string out = "a linear fit of ";
    out += dep_letter(s);
    out += '=';
    out += format_number(slope);
    out += ind_letter(s);
    const std::string b = format_number(intercept);
    out += (b.empty() || b[0] == '-') ? b : "+" + b;
    return out;
}

std::string pair_location(const StatResult& r) {
    return "(" + format_number(r.locations[0]) + ", " + format_number(r.locations[1]) + ")";
}

std::string slices_sentence(const SeriesFacts& s) {
    const auto pct = stat_values(s, ChartType::pie);
    std::vector<std::string> items;
    for (std::size_t i = 0; i < pct.size(); ++i) {
        const std::string label =
            i < s.x_categories.size() ? lowercase(s.x_categories[i]) : format_number(static_cast<double>(i));
        items.push_back(label + " (" + format_number(pct[i]) + "%)");
    }
    return "there are " + std::to_string(pct.size()) + " slices: " + oxford_join(items) + ".";
}

std::string axis_sentence(const SubplotFacts& sp) {
    std::vector<std::string> parts;
    std::vector<AxisScale> scales;
    for (const auto& axis : sp.axes) {
        const std::string name = axis_name_str(axis.name);
        std::string part;
        if (axis.label) {
            part = lowercase(*axis.label) + " is plotted on the " + name + "-axis from " +
                   bound_text(axis.min) + " to " + bound_text(axis.max);
        } else {
            part = "the " + name + "-axis ranges from " + bound_text(axis.min) + " to " +
                   bound_text(axis.max);
        }
        parts.push_back(std::move(part));
        scales.push_back(axis.scale);
    }
    if (parts.empty()) return {};

    const bool uniform = std::all_of(scales.begin(), scales.end(),
                                     [&](AxisScale s) { return s == scales.front(); });
    if (uniform && parts.size() >= 2) {
        const char* quantifier = parts.size() == 2 ? "both" : "all";
        return oxford_join(parts) + ", " + quantifier + " using " + scale_name(scales.front()) +
               " scales.";
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        parts[i] += std::string(" using a ") + scale_name(scales[i]) + " scale";
    }
    return oxford_join(parts) + ".";
}

std::string color_sentence(const SubplotFacts& sp, ChartType t) {
    if (t != ChartType::line && t != ChartType::radial_line && t != ChartType::scatter) return {};
    std::vector<std::string> clauses;
    std::size_t idx = 0;
    for (const SeriesFacts* s : data_series(sp)) {
        if (s->color_name) {
            const std::string label = series_display_label(*s, t, idx);
            const char* verb = label == "the data" ? " are plotted in " : " is plotted in ";
            clauses.push_back(label + verb + *s->color_name);
        }
        ++idx;
    }
    if (clauses.empty()) return {};
    return oxford_join(clauses) + ".";
}

std::string refline_text(double v) {
    // Reference lines print whole numbers with one decimal ("at y=0.0").
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        return format_number(v) + ".0";
    }
    return format_number(v);
}

struct TrendDefaults {
    bool pivot = false;
    bool overall = false;
    bool changes = false;
};

TrendDefaults trend_selection(const TrendSummary& t, const DescriptionOptions& options) {
    TrendDefaults sel;
    if (options.trends) {
        for (TrendKind k : *options.trends) {
            if (k == TrendKind::pivot) sel.pivot = true;
            if (k == TrendKind::overall_change) sel.overall = true;
            if (k == TrendKind::direction_changes) sel.changes = true;
        }
        if (t.stability == TrendSummary::Stability::fluctuating) sel.pivot = false;
        return sel;
    }
    if (t.stability == TrendSummary::Stability::fluctuating) {
        sel.overall = sel.changes = true;
    } else {
        sel.pivot = true;
    }
    return sel;
}

std::string trend_sentences(const SubplotFacts& sp, const SeriesFacts& raw_series,
                            ChartType type, const std::string& label,
                            const DescriptionOptions& options) {
    const SeriesFacts series = stat_series(raw_series, type);
    TrendSummary t;
    try {
        t = detect_trend(series);
    } catch (const InapplicableStatError&) {
        return {};
    }
    if (t.direction == TrendSummary::Direction::flat) return {};

    const auto sel = trend_selection(t, options);
    std::vector<std::string> sentences;

    if (sel.pivot && t.stability != TrendSummary::Stability::fluctuating) {
        const bool increasing = t.direction == TrendSummary::Direction::increase;
        const char* stab = t.stability == TrendSummary::Stability::strict ? "strictly" : "generally";
        const char* verb = increasing ? "increase" : "decrease";
        const char* extremum = increasing ? "max" : "min";
        const std::string where =
            resolve_location(sp, series, t.peak_location, t.peak_index);
        std::string s = label;
        s += ' ';
        s += stab;
        s += ' ';
        s += verb;
        const bool at_end = t.peak_index + 1 == series_length(series);
        if (at_end) {
            s += std::string(" to a ") + extremum + " at " + ind_letter(series) + "=" + where;
        } else {
            s += std::string(" up to their ") + extremum + " at " + ind_letter(series) + "=" + where;
            if (t.post_peak) {
                const char* post_stab =
                    *t.post_peak == TrendSummary::Stability::strict ? "strictly" : "generally";
                s += std::string(", then ") + post_stab + ' ' + (increasing ? "decrease" : "increase");
            }
        }
        s += '.';
        sentences.push_back(std::move(s));
    }
    if (sel.overall) {
        sentences.push_back(label + " has an overall change of " + dep_letter(series) + "=" +
                            format_number(t.overall_change) + " from start to end.");
    }
    if (sel.changes) {
        const auto n = t.direction_changes;
        sentences.push_back(label + " changes from increasing to decreasing " +
                            std::to_string(n) + (n == 1 ? " time." : " times."));
    }

    std::string out;
    for (const auto& s : sentences) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

}  // namespace

std::string series_display_label(const SeriesFacts& series, ChartType chart_type,
                                 std::size_t index_in_type) {
    if (series.label && !series.label->empty()) return lowercase(*series.label);
    if (chart_type == ChartType::strip) return "strip " + std::to_string(index_in_type + 1);
    if (chart_type == ChartType::boxplot) return "boxplot " + std::to_string(index_in_type);
    return "the data";
}

std::string render_l1(const SubplotFacts& sp, ChartType type, const DescriptionOptions& options) {
    std::vector<std::string> sentences;

    std::string head = chart_type_phrase(sp, type);
    if (sp.title) head += " titled '" + lowercase(*sp.title) + "'";
    head += '.';
    sentences.push_back(std::move(head));

    if (type == ChartType::pie) {
        for (const SeriesFacts* s : data_series(sp)) sentences.push_back(slices_sentence(*s));
    } else {
        const std::string axes = axis_sentence(sp);
        if (!axes.empty()) sentences.push_back(axes);
    }

    if (options.include_color_encodings) {
        const std::string colors = color_sentence(sp, type);
        if (!colors.empty()) sentences.push_back(colors);
    }

    for (const auto& r : sp.ref_lines) {
        sentences.push_back(std::string("there is a ") + (r.horizontal ? "horizontal" : "vertical") +
                            " line at " + (r.horizontal ? 'y' : 'x') + std::string("=") +
                            refline_text(r.position) + ".");
    }
    for (const auto& a : sp.annotations) {
        sentences.push_back("an annotation reads '" + lowercase(a.text) + "'.");
    }

    std::string out;
    for (const auto& s : sentences) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

std::string render_l2(const SubplotFacts& sp, ChartType type, const DescriptionOptions& options) {
    std::vector<std::string> sentences;
    const auto stats = options.stats ? *options.stats : default_statistics(type);

    if (type == ChartType::contour) {
        // "N contour lines are plotted with values ..." then the centers.
        std::vector<std::string> levels;
        const SeriesFacts* max_path = nullptr;
        const SeriesFacts* min_path = nullptr;
        for (const auto& s : sp.series) {
            if (!s.contour_level) continue;
            levels.push_back(format_number(*s.contour_level));
            if (!max_path || *s.contour_level > *max_path->contour_level) max_path = &s;
            if (!min_path || *s.contour_level < *min_path->contour_level) min_path = &s;
        }
        if (!levels.empty()) {
            sentences.push_back(std::to_string(levels.size()) + " contour lines are plotted with values " +
                                oxford_join(levels) + ".");
        }
        for (StatKind kind : stats) {
            const bool want_max = kind == StatKind::max_contour_center;
            const bool want_min = kind == StatKind::min_contour_center;
            const SeriesFacts* path = want_max ? max_path : (want_min ? min_path : nullptr);
            if (!path) continue;
            try {
                const StatResult r = compute_statistic(*path, kind);
                sentences.push_back(std::string("the ") + (want_max ? "max" : "min") +
                                    " contour is centered around " + pair_location(r) + ".");
            } catch (const InapplicableStatError&) {
            }
        }
    } else if (!stats.empty()) {
        std::size_t idx = 0;
        for (const SeriesFacts* raw : data_series(sp)) {
            const SeriesFacts series = stat_series(*raw, type);
            const std::string label = series_display_label(*raw, type, idx);
            ++idx;
            const char dep = type == ChartType::pie ? 'x' : dep_letter(series);
            const bool grid = series.z_values.has_value();
            const bool bare_scalars = type == ChartType::boxplot;

            std::vector<std::string> items;
            for (StatKind kind : stats) {
                try {
                    switch (kind) {
                        case StatKind::num_pts: {
                            const StatResult r = compute_statistic(series, kind);
                            items.push_back(format_number(r.values[0]) + " points");
                            break;
                        }
                        case StatKind::min:
                        case StatKind::max: {
                            const StatResult r = compute_statistic(series, kind);
                            const char* name = kind == StatKind::min ? "minimum" : "maximum";
                            std::string item = std::string("a ") + name + " value of " + dep + "=" +
                                               format_number(r.values[0]);
                            if (grid) {
                                item += " at " + pair_location(r);
                            } else if (type != ChartType::pie) {
                                item += std::string(" at ") + ind_letter(series) + "=" +
                                        resolve_location(sp, *raw, r.locations[0], r.indices[0]);
                            }
                            items.push_back(std::move(item));
                            break;
                        }
                        case StatKind::mean: {
                            if (type == ChartType::scatter) {
                                const double mx = kernels::mean(series.x_values);
                                const double my = kernels::mean(series.y_values);
                                items.push_back("an average of x=" + format_number(mx));
                                items.push_back("an average of y=" + format_number(my));
                                break;
                            }
                            const StatResult r = compute_statistic(series, kind);
                            items.push_back(std::string("an average of ") + dep + "=" +
                                            format_number(r.values[0]));
                            break;
                        }
                        case StatKind::median: {
                            const StatResult r = compute_statistic(series, kind);
                            items.push_back(bare_scalars
                                                ? "a median of " + format_number(r.values[0])
                                                : std::string("a median of ") + dep + "=" +
                                                      format_number(r.values[0]));
                            break;
                        }
                        case StatKind::std_dev: {
                            const StatResult r = compute_statistic(series, kind);
                            items.push_back(bare_scalars
                                                ? "a standard deviation of " + format_number(r.values[0])
                                                : std::string("a standard deviation of ") + dep + "=" +
                                                      format_number(r.values[0]));
                            break;
                        }
                        case StatKind::iqr: {
                            const StatResult r = compute_statistic(series, kind);
                            items.push_back(bare_scalars
                                                ? "an interquartile range of " + format_number(r.values[0])
                                                : std::string("an interquartile range of ") + dep + "=" +
                                                      format_number(r.values[0]));
                            break;
                        }
                        case StatKind::linear_fit: {
                            const StatResult r = compute_statistic(series, kind);
                            items.push_back(fit_text(series, r.values[0], r.values[1]));
                            break;
                        }
                        case StatKind::outliers: {
                            const StatResult r = detect_outliers(series, type);
                            if (r.values.empty()) {
                                items.push_back("no outliers");
                            } else if (r.values.size() == 1) {
                                items.push_back(std::string("1 outlier at ") + dep + "=" +
                                                format_number(r.values[0]));
                            } else {
                                items.push_back(std::to_string(r.values.size()) + " outliers");
                            }
                            break;
                        }
                        case StatKind::slice_percentages: {
                            if (type != ChartType::pie) {
                                sentences.push_back(slices_sentence(series));
                            }
                            break;
                        }
                        case StatKind::correlation:
                        case StatKind::max_contour_center:
                        case StatKind::min_contour_center:
                            break;  // handled elsewhere / inapplicable per series
                    }
                } catch (const InapplicableStatError&) {
                } catch (const DegenerateFitError&) {
                }
            }
            if (!items.empty()) sentences.push_back(label + " has " + oxford_join(items) + ".");
        }
    }

    // Two series plotted against the same x on a line chart get a
    // correlation sentence.
    const bool want_correlation =
        !options.stats ||
        std::find(options.stats->begin(), options.stats->end(), StatKind::correlation) !=
            options.stats->end();
    if (type == ChartType::line && want_correlation) {
        const auto ds = data_series(sp);
        if (ds.size() == 2 && ds[0]->x_values == ds[1]->x_values) {
            try {
                const double r = pearson_correlation(ds[0]->y_values, ds[1]->y_values);
                sentences.push_back(series_display_label(*ds[0], type, 0) + " and " +
                                    series_display_label(*ds[1], type, 1) +
                                    " have a correlation of " + format_number(r) + ".");
            } catch (const Error&) {
            }
        }
    }

    std::string out;
    for (const auto& s : sentences) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

std::string render_l3(const SubplotFacts& sp, ChartType type, const DescriptionOptions& options) {
    switch (type) {
        case ChartType::scatter:
        case ChartType::strip:
        case ChartType::boxplot:
        case ChartType::contour:
        case ChartType::blank:
        case ChartType::unknown:
        case ChartType::heatmap:
        case ChartType::image:
            return {};
        default:
            break;
    }
    std::string out;
    std::size_t idx = 0;
    for (const SeriesFacts* s : data_series(sp)) {
        const std::string label = series_display_label(*s, type, idx);
        ++idx;
        const std::string t = trend_sentences(sp, *s, type, label, options);
        if (t.empty()) continue;
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

std::string render_data_table(const SubplotFacts& sp, int max_rows, int max_cols) {
    max_rows = std::max(1, max_rows);
    max_cols = std::max(1, max_cols);

    const auto ds = data_series(sp);
    const SeriesFacts* grid = nullptr;
    std::vector<const SeriesFacts*> one_d;
    for (const SeriesFacts* s : ds) {
        if (s->z_values) {
            if (!grid) grid = s;
        } else if (!s->x_values.empty() || !s->y_values.empty()) {
            one_d.push_back(s);
        }
    }

    auto emit = [](const std::vector<std::vector<std::string>>& rows) {
        std::string out;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out += "|";
            for (const auto& cell : rows[r]) out += " " + cell + " |";
            out += "\n";
            if (r == 0) {
                out += "|";
                for (std::size_t c = 0; c < rows[0].size(); ++c) out += " --- |";
                out += "\n";
            }
        }
        return out;
    };

    if (!one_d.empty()) {
        const SeriesFacts* first = one_d.front();
        const AxisFacts* ind_axis = sp.axis(first->value_axis == ValueAxis::x ? AxisName::y : AxisName::x);
        const AxisFacts* dep_axis = sp.axis(first->value_axis == ValueAxis::x ? AxisName::x : AxisName::y);

        const bool col_truncated = static_cast<int>(one_d.size()) > max_cols - 1;
        const std::size_t ncols = col_truncated ? static_cast<std::size_t>(max_cols - 1) : one_d.size();

        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header;
        header.push_back(ind_axis && ind_axis->label ? lowercase(*ind_axis->label)
                                                     : std::string(1, first->value_axis == ValueAxis::x ? 'y' : 'x'));
        const ChartType type = infer_chart_type(sp);
        for (std::size_t c = 0; c < ncols; ++c) {
            std::string h = series_display_label(*one_d[c], type, c);
            if (dep_axis && dep_axis->label) h += " (" + lowercase(*dep_axis->label) + ")";
            header.push_back(std::move(h));
        }
        if (col_truncated) header.push_back("…");
        rows.push_back(std::move(header));

        const auto& ind = first->value_axis == ValueAxis::x ? first->y_values : first->x_values;
        std::size_t nrows = 0;
        for (const SeriesFacts* s : one_d) nrows = std::max(nrows, series_length(*s));
        const bool row_truncated = static_cast<int>(nrows) > max_rows;
        const std::size_t shown = row_truncated ? static_cast<std::size_t>(max_rows) : nrows;

        for (std::size_t r = 0; r < shown; ++r) {
            std::vector<std::string> row;
            if (ind_axis && (ind_axis->scale == AxisScale::datetime || ind_axis->scale == AxisScale::categorical) &&
                ind_axis->tick_labels.size() == nrows && !ind_axis->tick_labels[r].empty()) {
                row.push_back(lowercase(ind_axis->tick_labels[r]));
            } else if (r < ind.size()) {
                row.push_back(format_number(ind[r]));
            } else {
                row.push_back(std::to_string(r));
            }
            for (std::size_t c = 0; c < ncols; ++c) {
                const auto& dep = one_d[c]->value_axis == ValueAxis::x ? one_d[c]->x_values
                                                                       : one_d[c]->y_values;
                row.push_back(r < dep.size() ? format_number(dep[r]) : std::string{});
            }
            if (col_truncated) row.push_back("…");
            rows.push_back(std::move(row));
        }
        if (row_truncated) {
            std::vector<std::string> ell(rows[0].size(), "…");
            rows.push_back(std::move(ell));
        }
        return emit(rows);
    }

    if (grid) {
        const auto& z = *grid->z_values;
        const std::size_t nx = z.size();
        const std::size_t ny = nx ? z[0].size() : 0;
        if (nx == 0 || ny == 0) throw NoTabularDataError("grid series is empty");

        const bool col_truncated = static_cast<int>(ny) > max_cols - 1;
        const std::size_t ncols = col_truncated ? static_cast<std::size_t>(max_cols - 1) : ny;
        const bool row_truncated = static_cast<int>(nx) > max_rows;
        const std::size_t shown = row_truncated ? static_cast<std::size_t>(max_rows) : nx;

        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header;
        header.push_back("x \\ y");
        for (std::size_t j = 0; j < ncols; ++j) {
            header.push_back(j < grid->y_values.size() ? format_number(grid->y_values[j])
                                                       : std::to_string(j));
        }
        if (col_truncated) header.push_back("…");
        rows.push_back(std::move(header));

        for (std::size_t i = 0; i < shown; ++i) {
            std::vector<std::string> row;
            row.push_back(i < grid->x_values.size() ? format_number(grid->x_values[i])
                                                    : std::to_string(i));
            for (std::size_t j = 0; j < ncols; ++j) row.push_back(format_number(z[i][j]));
            if (col_truncated) row.push_back("…");
            rows.push_back(std::move(row));
        }
        if (row_truncated) {
            std::vector<std::string> ell(rows[0].size(), "…");
            rows.push_back(std::move(ell));
        }
        return emit(rows);
    }

    throw NoTabularDataError("subplot has no tabular series");
}

AltText generate_alt_text(const FigureFacts& figure, const DescriptionOptions& options) {
    AltText alt;
    alt.level = options.desc_level;

    struct Piece {
        std::size_t segment;
        int slot;  // 1..3
        std::size_t begin = 0, end = 0;
    };
    std::vector<Piece> pieces;
    std::string raw;

    const bool multi = figure.subplots.size() > 1;

    auto append_piece = [&](std::size_t segment, int slot, const std::string& content,
                            const char* separator) {
        if (content.empty()) return;
        if (!raw.empty()) raw += separator;
        Piece p{segment, slot, raw.size(), 0};
        raw += content;
        p.end = raw.size();
        pieces.push_back(p);
    };

    for (std::size_t i = 0; i < figure.subplots.size(); ++i) {
        const SubplotFacts& sp = figure.subplots[i];
        const ChartType type = infer_chart_type(sp);

        std::string l1 = render_l1(sp, type, options);
        if (multi) {
            std::string prefix = "subplot " + std::to_string(i + 1) + ": ";
            if (i == 0) {
                std::string figse = "a figure with " + std::to_string(figure.subplots.size()) + " subplots";
                if (figure.suptitle) figse += " titled '" + lowercase(*figure.suptitle) + "'";
                figse += ".\n";
                prefix = figse + prefix;
            }
            l1 = prefix + l1;
        }
        append_piece(i, 1, l1, i == 0 ? " " : "\n");

        if (options.desc_level >= 2) {
            append_piece(i, 2, render_l2(sp, type, options), " ");
        }
        if (options.desc_level >= 3) {
            append_piece(i, 3, render_l3(sp, type, options), " ");
        }
    }

    alt.text = capitalize_sentences(raw, true);
    alt.segments.resize(figure.subplots.size());
    for (const Piece& p : pieces) {
        const std::string slice = alt.text.substr(p.begin, p.end - p.begin);
        SubplotSegments& seg = alt.segments[p.segment];
        if (p.slot == 1) seg.l1 = slice;
        if (p.slot == 2) seg.l2 = slice;
        if (p.slot == 3) seg.l3 = slice;
    }

    if (options.include_table) {
        std::string tables;
        for (const auto& sp : figure.subplots) {
            try {
                const std::string t = render_data_table(sp, options.max_table_rows, options.max_table_cols);
                if (!tables.empty()) tables += "\n";
                tables += t;
            } catch (const NoTabularDataError&) {
            }
        }
        if (!tables.empty()) alt.table_markdown = tables;
    }

    return alt;
}

}  // namespace chartalt
