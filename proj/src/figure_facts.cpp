#include "chartalt/figure_facts.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "chartalt/errors.hpp"
#include "chartalt/render.hpp"

namespace chartalt {

namespace {

struct Named {
    const char* name;
    double r, g, b;
};

constexpr std::array<Named, 14> kNamedColors = {{
    {"dark blue", 0x1f / 255.0, 0x77 / 255.0, 0xb4 / 255.0},
    {"orange", 0xff / 255.0, 0x7f / 255.0, 0x0e / 255.0},
    {"green", 0x2c / 255.0, 0xa0 / 255.0, 0x2c / 255.0},
    {"red", 0xd6 / 255.0, 0x27 / 255.0, 0x28 / 255.0},
    {"purple", 0x94 / 255.0, 0x67 / 255.0, 0xbd / 255.0},
    {"brown", 0x8c / 255.0, 0x56 / 255.0, 0x4b / 255.0},
    {"pink", 0xe3 / 255.0, 0x77 / 255.0, 0xc2 / 255.0},
    {"gray", 0x7f / 255.0, 0x7f / 255.0, 0x7f / 255.0},
    {"olive", 0xbc / 255.0, 0xbd / 255.0, 0x22 / 255.0},
    {"cyan", 0x17 / 255.0, 0xbe / 255.0, 0xcf / 255.0},
    {"black", 0.0, 0.0, 0.0},
    {"white", 1.0, 1.0, 1.0},
    {"yellow", 0.9, 0.9, 0.13},
    {"blue", 0.0, 0.0, 1.0},
}};

const std::array<const char*, 12> kMonthAbbrev = {
    "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"};
const std::array<const char*, 12> kMonthFull = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

bool is_numeric_label(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end && *end == '\0';
}

bool is_date_label(const std::string& raw) {
    std::string s;
    for (char c : raw) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const char* m : kMonthAbbrev) {
        if (s == m) return true;
    }
    for (const char* m : kMonthFull) {
        if (s == m) return true;
    }
    // "june"/"july"/"sept" style partials.
    for (const char* m : kMonthFull) {
        if (s.size() >= 3 && std::string(m).rfind(s, 0) == 0) return true;
    }
    // ISO-ish dates: 2021-03 / 2021-03-14 / 3/14/2021.
    int digits = 0, seps = 0;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) ++digits;
        else if (c == '-' || c == '/' || c == ':') ++seps;
        else return false;
    }
    return digits >= 4 && seps >= 1;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void add(const std::vector<double>& vs) {
        for (double v : vs) add(v);
    }
    bool valid() const { return lo <= hi; }
};

// Walks the marks of an axes (twin already merged) and accumulates data
// extents for default axis limits.
void accumulate_ranges(const host::Axes& ax, Range& rx, Range& ry) {
    for (const auto& m : ax.lines) { rx.add(m.xs); ry.add(m.ys); }
    for (const auto& m : ax.points) { rx.add(m.xs); ry.add(m.ys); }
    for (const auto& m : ax.bars) {
        if (m.horizontal) {
            ry.add(m.positions);
            rx.add(0.0);
            rx.add(m.values);
        } else {
            rx.add(m.positions);
            ry.add(0.0);
            ry.add(m.values);
        }
    }
    for (const auto& m : ax.quadmeshes) { rx.add(m.x_edges); ry.add(m.y_edges); }
    for (const auto& m : ax.contour_paths) {
        for (const auto& [vx, vy] : m.vertices) { rx.add(vx); ry.add(vy); }
    }
    for (const auto& m : ax.boxes) {
        rx.add(m.position);
        ry.add(m.values);
    }
}

AxisFacts make_axis_facts(AxisName name, const host::Axis& axis, const Range& data_range) {
    AxisFacts f;
    f.name = name;
    if (axis.label && !axis.label->empty()) f.label = *axis.label;
    for (const auto& t : axis.ticks) {
        f.tick_labels.push_back(t.label);
        f.tick_positions.push_back(t.position);
    }
    f.scale = detect_scale(f.tick_labels, axis.log_scale);

    if (f.scale == AxisScale::datetime || f.scale == AxisScale::categorical) {
        f.min = f.tick_labels.empty() ? AxisBound{std::string{}} : AxisBound{f.tick_labels.front()};
        f.max = f.tick_labels.empty() ? AxisBound{std::string{}} : AxisBound{f.tick_labels.back()};
        return f;
    }

    double lo, hi;
    if (axis.min && axis.max) {
        lo = *axis.min;
        hi = *axis.max;
    } else if (data_range.valid()) {
        const double span = data_range.hi - data_range.lo;
        const double margin = span > 0 ? 0.05 * span : 0.06;
        lo = axis.min.value_or(data_range.lo - margin);
        hi = axis.max.value_or(data_range.hi + margin);
    } else {
        lo = axis.min.value_or(0.0);
        hi = axis.max.value_or(1.0);
    }
    f.min = lo;
    f.max = hi;
    return f;
}

void snapshot_marks(const host::Axes& ax, SubplotFacts& sp, const AxisFacts& y_axis,
                    std::vector<std::string>& warnings, int subplot_index) {
    auto& inv = sp.marks;
    inv.polar_flag = ax.polar;

    for (const auto& m : ax.lines) {
        inv.line_objects += 1;
        SeriesFacts s;
        if (!m.label.empty()) s.label = m.label;
        s.x_values = m.xs;
        s.y_values = m.ys;
        s.color_name = color_name(m.color);
        s.value_axis = ValueAxis::y;
        sp.series.push_back(std::move(s));
    }
    const bool y_is_banded = y_axis.scale == AxisScale::categorical;
    for (const auto& m : ax.points) {
        inv.point_collections += 1;
        SeriesFacts s;
        if (!m.label.empty()) s.label = m.label;
        s.x_values = m.xs;
        s.y_values = m.ys;
        s.color_name = color_name(m.color);
        // Point bands on a categorical axis carry their values on the
        // numeric axis.
        bool degenerate_y = !m.ys.empty() &&
                            *std::max_element(m.ys.begin(), m.ys.end()) -
                                    *std::min_element(m.ys.begin(), m.ys.end()) <
                                1e-9;
        s.value_axis = (y_is_banded || degenerate_y) ? ValueAxis::x : ValueAxis::y;
        sp.series.push_back(std::move(s));
    }
    for (const auto& m : ax.bars) {
        inv.rectangles += static_cast<int>(m.values.size());
        SeriesFacts s;
        if (!m.label.empty()) s.label = m.label;
        s.x_values = m.positions;
        s.y_values = m.values;
        s.color_name = color_name(m.color);
        s.value_axis = m.horizontal ? ValueAxis::x : ValueAxis::y;
        sp.series.push_back(std::move(s));
    }
    for (const auto& m : ax.wedges) {
        inv.wedges += static_cast<int>(m.values.size());
        SeriesFacts s;
        s.y_values = m.values;
        s.x_categories = m.labels;
        for (std::size_t i = 0; i < m.values.size(); ++i) s.x_values.push_back(static_cast<double>(i));
        s.value_axis = ValueAxis::y;
        sp.series.push_back(std::move(s));
    }
    for (const auto& m : ax.quadmeshes) {
        inv.quadmeshes += 1;
        const std::size_t nx = m.z.size();
        const std::size_t ny = nx ? m.z[0].size() : 0;
        inv.grid_shape = {nx, ny};
        SeriesFacts s;
        s.z_values = m.z;
        for (std::size_t i = 0; i < nx; ++i) s.x_values.push_back(m.x_edges.size() > i ? m.x_edges[i] : static_cast<double>(i));
        for (std::size_t j = 0; j < ny; ++j) s.y_values.push_back(m.y_edges.size() > j ? m.y_edges[j] : static_cast<double>(j));
        s.value_axis = ValueAxis::z;
        sp.series.push_back(std::move(s));
    }
    for (const auto& m : ax.images) {
        inv.quadmeshes += 1;
        const std::size_t nx = m.z.size();
        const std::size_t ny = nx ? m.z[0].size() : 0;
        inv.grid_shape = {nx, ny};
        SeriesFacts s;
        s.z_values = m.z;
        for (std::size_t i = 0; i < nx; ++i) s.x_values.push_back(static_cast<double>(i));
        for (std::size_t j = 0; j < ny; ++j) s.y_values.push_back(static_cast<double>(j));
        s.value_axis = ValueAxis::z;
        sp.series.push_back(std::move(s));
    }
    if (!ax.contour_paths.empty()) {
        inv.contour_sets += 1;
        for (const auto& m : ax.contour_paths) {
            SeriesFacts s;
            s.contour_level = m.level;
            for (const auto& [vx, vy] : m.vertices) {
                s.x_values.push_back(vx);
                s.y_values.push_back(vy);
            }
            s.value_axis = ValueAxis::y;
            sp.series.push_back(std::move(s));
        }
    }
    for (const auto& m : ax.boxes) {
        inv.box_artists += 1;
        SeriesFacts s;
        if (!m.label.empty()) s.label = m.label;
        s.x_values = {m.position};
        s.y_values = m.values;
        s.color_name = color_name(m.color);
        s.value_axis = ValueAxis::y;
        sp.series.push_back(std::move(s));
    }
    for (const auto& other : ax.other_artists) {
        warnings.push_back("subplot " + std::to_string(subplot_index + 1) +
                           ": unsupported artist '" + other.kind + "' skipped");
    }
}

}  // namespace

const AxisFacts* SubplotFacts::axis(AxisName name) const {
    for (const auto& a : axes) {
        if (a.name == name) return &a;
    }
    return nullptr;
}

std::string color_name(const host::Color& c) {
    double best = std::numeric_limits<double>::infinity();
    const char* name = "gray";
    for (const auto& n : kNamedColors) {
        const double d = (c.r - n.r) * (c.r - n.r) + (c.g - n.g) * (c.g - n.g) +
                         (c.b - n.b) * (c.b - n.b);
        if (d < best) {
            best = d;
            name = n.name;
        }
    }
    return name;
}

AxisScale detect_scale(const std::vector<std::string>& tick_labels, bool log_flag) {
    std::vector<std::string> labels;
    for (const auto& t : tick_labels) {
        if (!t.empty()) labels.push_back(t);
    }
    if (!labels.empty()) {
        std::size_t dateish = 0, numeric = 0;
        for (const auto& t : labels) {
            if (is_date_label(t)) ++dateish;
            else if (is_numeric_label(t)) ++numeric;
        }
        if (3 * dateish >= 2 * labels.size()) return AxisScale::datetime;
        if (numeric < labels.size()) return AxisScale::categorical;
    }
    if (log_flag) return AxisScale::log;
    return AxisScale::linear;
}

const char* scale_name(AxisScale s) {
    switch (s) {
        case AxisScale::linear: return "linear";
        case AxisScale::log: return "log";
        case AxisScale::datetime: return "datetime";
        case AxisScale::categorical: return "categorical";
    }
    return "linear";
}

std::string axis_name_str(AxisName n) {
    switch (n) {
        case AxisName::x: return "x";
        case AxisName::y: return "y";
        case AxisName::z: return "z";
    }
    return "x";
}

FigureFacts snapshot_figure(const host::Figure& fig) {
    FigureFacts facts;
    if (fig.suptitle && !fig.suptitle->empty()) facts.suptitle = *fig.suptitle;

    for (std::size_t i = 0; i < fig.subplot_count(); ++i) {
        const host::Axes& ax = fig.subplot(static_cast<int>(i));
        SubplotFacts sp;
        if (ax.title && !ax.title->empty()) sp.title = *ax.title;

        // Twin axes merge into the parent subplot.
        if (ax.twin) {
            facts.warnings.push_back("subplot " + std::to_string(i + 1) +
                                     ": twinned axes merged into one subplot");
        }

        Range rx, ry;
        accumulate_ranges(ax, rx, ry);
        if (ax.twin) accumulate_ranges(*ax.twin, rx, ry);

        AxisFacts xf = make_axis_facts(AxisName::x, ax.x, rx);
        AxisFacts yf = make_axis_facts(AxisName::y, ax.y, ry);

        std::vector<std::string> mark_warnings;
        snapshot_marks(ax, sp, yf, mark_warnings, static_cast<int>(i));
        if (ax.twin) snapshot_marks(*ax.twin, sp, yf, mark_warnings, static_cast<int>(i));
        for (auto& w : mark_warnings) facts.warnings.push_back(std::move(w));

        sp.axes.push_back(std::move(xf));
        sp.axes.push_back(std::move(yf));

        if (ax.colorbar) {
            AxisFacts zf;
            zf.name = AxisName::z;
            if (ax.colorbar->label && !ax.colorbar->label->empty()) zf.label = *ax.colorbar->label;
            double lo = 0.0, hi = 0.0;
            bool have = false;
            if (ax.colorbar->min && ax.colorbar->max) {
                lo = *ax.colorbar->min;
                hi = *ax.colorbar->max;
                have = true;
            } else {
                Range rz;
                for (const auto& s : sp.series) {
                    if (!s.z_values) continue;
                    for (const auto& col : *s.z_values) rz.add(col);
                }
                if (rz.valid()) {
                    lo = rz.lo;
                    hi = rz.hi;
                    have = true;
                }
            }
            if (have) {
                zf.min = lo;
                zf.max = hi;
            }
            zf.scale = AxisScale::linear;
            sp.axes.push_back(std::move(zf));
        }

        for (const auto& a : ax.annotations) sp.annotations.push_back({a.text, a.x, a.y});
        for (const auto& r : ax.ref_lines) sp.ref_lines.push_back({r.horizontal, r.position});
        for (const auto& l : ax.legend) sp.legend_entries.emplace_back(l.label, color_name(l.color));

        facts.subplots.push_back(std::move(sp));
    }

    facts.image_bytes = render_figure_png(fig);
    return facts;
}

FigureFacts snapshot_current_figure() {
    const host::Figure* fig = host::current_figure();
    if (!fig) throw NoFigureError();
    return snapshot_figure(*fig);
}

}  // namespace chartalt
