#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chartalt/figure.hpp"

namespace chartalt {

enum class AxisScale { linear, log, datetime, categorical };
enum class AxisName { x, y, z };
enum class ValueAxis { x, y, z };

// Axis bounds are numeric for linear/log axes and tick-label text for
// datetime/categorical axes.
using AxisBound = std::variant<double, std::string>;

struct AxisFacts {
    AxisName name = AxisName::x;
    std::optional<std::string> label;
    AxisBound min = 0.0;
    AxisBound max = 0.0;
    AxisScale scale = AxisScale::linear;
    std::vector<std::string> tick_labels;
    std::vector<double> tick_positions;

    bool operator==(const AxisFacts&) const = default;
};

struct MarkInventory {
    int rectangles = 0;
    int line_objects = 0;
    int point_collections = 0;
    int quadmeshes = 0;  // includes pixel-grid images
    int wedges = 0;
    int contour_sets = 0;
    int box_artists = 0;
    bool polar_flag = false;
    // (nx, ny) when a 2-D array artist exists.
    std::optional<std::pair<std::size_t, std::size_t>> grid_shape;

    bool operator==(const MarkInventory&) const = default;
    bool empty() const {
        return rectangles == 0 && line_objects == 0 && point_collections == 0 &&
               quadmeshes == 0 && wedges == 0 && contour_sets == 0 && box_artists == 0;
    }
};

struct SeriesFacts {
    std::optional<std::string> label;
    std::vector<double> x_values;
    std::vector<std::string> x_categories;  // pie slice labels and the like
    std::vector<double> y_values;
    // z[ix][iy] matching MarkInventory.grid_shape.
    std::optional<std::vector<std::vector<double>>> z_values;
    std::optional<std::string> color_name;
    ValueAxis value_axis = ValueAxis::y;  // which axis carries the dependent values
    std::optional<double> contour_level;  // set for contour path series

    bool operator==(const SeriesFacts&) const = default;
};

struct Annotation {
    std::string text;
    double x = 0.0, y = 0.0;

    bool operator==(const Annotation&) const = default;
};

struct RefLineFacts {
    bool horizontal = true;
    double position = 0.0;

    bool operator==(const RefLineFacts&) const = default;
};

struct SubplotFacts {
    std::optional<std::string> title;
    std::vector<AxisFacts> axes;  // x, y, and optionally z (colorbar)
    MarkInventory marks;
    std::vector<SeriesFacts> series;
    std::vector<Annotation> annotations;
    std::vector<RefLineFacts> ref_lines;
    std::vector<std::pair<std::string, std::string>> legend_entries;  // (label, color name)

    bool operator==(const SubplotFacts&) const = default;
    const AxisFacts* axis(AxisName name) const;
};

struct FigureFacts {
    std::optional<std::string> suptitle;
    std::vector<SubplotFacts> subplots;  // row-major, non-empty for any snapshot
    std::vector<std::uint8_t> image_bytes;  // rendered PNG
    // Non-fatal snapshot warnings (unsupported artists, merged twin axes).
    std::vector<std::string> warnings;

    bool operator==(const FigureFacts&) const = default;
};

// Nearest named color for a host color.
std::string color_name(const host::Color& c);

// Detects the scale of an axis from its tick labels and log flag: datetime
// when at least 2/3 of the labels parse as dates or month names, categorical
// for other non-numeric labels, log per the host flag, linear otherwise.
AxisScale detect_scale(const std::vector<std::string>& tick_labels, bool log_flag);

const char* scale_name(AxisScale s);
std::string axis_name_str(AxisName n);

// Mirrors the given figure into an immutable FigureFacts. Raw data is deep
// copied; image_bytes holds the figure rendered at its current DPI.
FigureFacts snapshot_figure(const host::Figure& fig);

// Snapshot of the host registry's current figure; throws NoFigureError when
// the registry is empty.
FigureFacts snapshot_current_figure();

}  // namespace chartalt
