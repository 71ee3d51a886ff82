#include "chartalt/chart_type.hpp"

#include <algorithm>
#include <cmath>

namespace chartalt {

namespace {

bool is_ordinal_scale(const AxisFacts* a) {
    return a && (a->scale == AxisScale::categorical || a->scale == AxisScale::datetime);
}

bool numeric_bound(const AxisBound& b, double& out) {
    if (const double* v = std::get_if<double>(&b)) {
        out = *v;
        return true;
    }
    return false;
}

// True when the axes span the host's default pixel extent -0.5..n-0.5.
bool pixel_extent_axes(const SubplotFacts& sp) {
    if (!sp.marks.grid_shape) return false;
    const auto [nx, ny] = *sp.marks.grid_shape;
    const AxisFacts* x = sp.axis(AxisName::x);
    const AxisFacts* y = sp.axis(AxisName::y);
    if (!x || !y) return false;
    double x0, x1, y0, y1;
    if (!numeric_bound(x->min, x0) || !numeric_bound(x->max, x1) ||
        !numeric_bound(y->min, y0) || !numeric_bound(y->max, y1)) {
        return false;
    }
    auto close = [](double a, double b) { return std::fabs(a - b) < 1e-9; };
    return close(x0, -0.5) && close(x1, static_cast<double>(nx) - 0.5) &&
           close(y0, -0.5) && close(y1, static_cast<double>(ny) - 0.5);
}

// A point collection is a strip band when its values collapse onto one
// coordinate band on either axis.
bool degenerate_points(const SubplotFacts& sp) {
    bool any = false;
    for (const auto& s : sp.series) {
        if (s.z_values || s.contour_level) continue;
        if (s.x_values.empty() || s.y_values.empty()) continue;
        auto band = [](const std::vector<double>& v) {
            const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            return *hi - *lo < 1e-9;
        };
        if (!band(s.x_values) && !band(s.y_values)) return false;
        any = true;
    }
    return any;
}

}  // namespace

const char* chart_type_id(ChartType t) {
    switch (t) {
        case ChartType::line: return "line";
        case ChartType::bar: return "bar";
        case ChartType::scatter: return "scatter";
        case ChartType::radial_line: return "radial_line";
        case ChartType::pie: return "pie";
        case ChartType::strip: return "strip";
        case ChartType::contour: return "contour";
        case ChartType::heatmap: return "heatmap";
        case ChartType::image: return "image";
        case ChartType::boxplot: return "boxplot";
        case ChartType::blank: return "blank";
        case ChartType::unknown: return "unknown";
    }
    return "unknown";
}

TypeInference infer_chart_type_detailed(const SubplotFacts& sp) {
    const MarkInventory& m = sp.marks;
    TypeInference r;

    // Distinct chart families present (lines and points combine: a line
    // plot may legitimately draw both).
    int families = 0;
    if (m.box_artists > 0) ++families;
    if (m.wedges > 0) ++families;
    if (m.contour_sets > 0) ++families;
    if (m.quadmeshes > 0) ++families;
    if (m.rectangles > 0) ++families;
    if (m.line_objects > 0 || m.point_collections > 0) ++families;
    r.mixed_type = families >= 2;

    if (m.empty()) {
        r.type = ChartType::blank;
        return r;
    }
    if (m.box_artists > 0) {
        r.type = ChartType::boxplot;
        return r;
    }
    if (m.wedges > 0) {
        r.type = ChartType::pie;
        return r;
    }
    if (m.contour_sets > 0) {
        r.type = ChartType::contour;
        return r;
    }
    if (m.quadmeshes > 0) {
        r.type = pixel_extent_axes(sp) ? ChartType::image : ChartType::heatmap;
        return r;
    }
    if (m.rectangles >= 2 &&
        (is_ordinal_scale(sp.axis(AxisName::x)) || is_ordinal_scale(sp.axis(AxisName::y)))) {
        r.type = ChartType::bar;
        return r;
    }
    if (m.polar_flag && m.line_objects > 0) {
        r.type = ChartType::radial_line;
        return r;
    }
    if (m.point_collections > 0 && m.line_objects == 0) {
        const bool banded = is_ordinal_scale(sp.axis(AxisName::x)) ||
                            is_ordinal_scale(sp.axis(AxisName::y)) || degenerate_points(sp);
        r.type = banded ? ChartType::strip : ChartType::scatter;
        return r;
    }
    if (m.line_objects > 0) {
        r.type = ChartType::line;
        return r;
    }
    r.type = ChartType::unknown;
    return r;
}

ChartType infer_chart_type(const SubplotFacts& subplot) {
    return infer_chart_type_detailed(subplot).type;
}

}  // namespace chartalt
