#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// The host plotting facade: a small in-memory figure model with a global
// "current figure", in the style of pyplot. Library users (and the notebook
// DSL) build figures through this API; the snapshot layer introspects it.
// The registry is plain global state and must be driven from one thread.
namespace chartalt::host {

struct Color {
    double r = 0.0, g = 0.0, b = 0.0;
};

// Default color cycle (C0, C1, ...).
Color cycle_color(std::size_t index);
// Parses "#rrggbb", "C3", or a known color name. Returns C0 on failure.
Color parse_color(const std::string& spec);

struct LineMark {
    std::vector<double> xs, ys;
    Color color;
    std::string label;  // empty = unlabeled
};

struct PointMark {
    std::vector<double> xs, ys;
    Color color;
    std::string label;
};

struct BarMark {
    // One bar series: positions are category slots (0..n-1 by default).
    std::vector<double> positions;
    std::vector<double> values;
    bool horizontal = false;
    Color color;
    std::string label;
};

struct WedgeMark {
    std::vector<double> values;  // raw slice values; percentages derived
    std::vector<std::string> labels;
    std::vector<Color> colors;
};

struct QuadMeshMark {
    // z[ix][iy]; x_edges has nx+1 entries, y_edges ny+1.
    std::vector<double> x_edges, y_edges;
    std::vector<std::vector<double>> z;
};

struct ImageMark {
    // z[ix][iy]: column-major pixel grid, ix = column, iy = row.
    std::vector<std::vector<double>> z;
};

struct ContourPathMark {
    double level = 0.0;
    std::vector<std::pair<double, double>> vertices;
};

struct BoxMark {
    double position = 0.0;
    std::vector<double> values;  // the box artist retains its source data
    Color color;
    std::string label;
};

// Artist kinds outside the supported inventory; recorded so snapshots can
// warn and continue.
struct OtherArtist {
    std::string kind;
};

struct Annotation {
    std::string text;
    double x = 0.0, y = 0.0;
};

struct RefLine {
    bool horizontal = true;
    double position = 0.0;
};

struct Tick {
    double position = 0.0;
    std::string label;
};

struct Axis {
    std::optional<std::string> label;
    std::optional<double> min, max;  // explicit limits win over data range
    bool log_scale = false;
    std::vector<Tick> ticks;
};

struct Colorbar {
    std::optional<std::string> label;
    std::optional<double> min, max;  // defaults to grid data range
};

struct LegendEntry {
    std::string label;
    Color color;
};

class Axes {
public:
    std::optional<std::string> title;
    Axis x, y;
    std::optional<Colorbar> colorbar;
    bool polar = false;

    std::vector<LineMark> lines;
    std::vector<PointMark> points;
    std::vector<BarMark> bars;
    std::vector<WedgeMark> wedges;
    std::vector<QuadMeshMark> quadmeshes;
    std::vector<ImageMark> images;
    std::vector<ContourPathMark> contour_paths;
    std::vector<BoxMark> boxes;
    std::vector<OtherArtist> other_artists;

    std::vector<Annotation> annotations;
    std::vector<RefLine> ref_lines;
    std::vector<LegendEntry> legend;  // explicit legend entries

    // Twin axes share the plotting area; the snapshot merges their marks.
    std::unique_ptr<Axes> twin;

    // Convenience builders used by the DSL and tests.
    LineMark& plot(std::vector<double> xs, std::vector<double> ys, std::string label = {});
    PointMark& scatter(std::vector<double> xs, std::vector<double> ys, std::string label = {});
    BarMark& bar(std::vector<std::string> categories, std::vector<double> values,
                 bool horizontal = false, std::string label = {});
    WedgeMark& pie(std::vector<double> values, std::vector<std::string> labels);
    QuadMeshMark& pcolormesh(std::vector<double> x_edges, std::vector<double> y_edges,
                             std::vector<std::vector<double>> z);
    ImageMark& imshow(std::vector<std::vector<double>> pixel_rows);
    BoxMark& boxplot(std::vector<double> values);
    ContourPathMark& contour_path(double level, std::vector<std::pair<double, double>> vertices);

    void annotate(std::string text, double x, double y);
    void axhline(double y_value);
    void axvline(double x_value);
    void set_xticks(std::vector<double> positions, std::vector<std::string> labels);
    void set_yticks(std::vector<double> positions, std::vector<std::string> labels);
    Axes& twinx();

    std::size_t next_color_ = 0;
};

class Figure {
public:
    Figure(int rows, int cols);

    std::optional<std::string> suptitle;
    int rows = 1, cols = 1;
    double width_inches = 6.4, height_inches = 4.8;
    double dpi = 100.0;

    Axes& subplot(int index_row_major) { return *subplots_.at(static_cast<std::size_t>(index_row_major)); }
    const Axes& subplot(int index_row_major) const { return *subplots_.at(static_cast<std::size_t>(index_row_major)); }
    std::size_t subplot_count() const { return subplots_.size(); }

private:
    std::vector<std::unique_ptr<Axes>> subplots_;
};

// Global current-figure registry.
Figure& figure(int rows = 1, int cols = 1);    // creates and makes current
Figure* current_figure();                      // nullptr when none
Axes& gca();                                   // current axes (subplot 0 unless selected)
void select_subplot(int index_row_major);
void close_all();
std::size_t figures_created();  // monotonically increasing counter for default filenames

}  // namespace chartalt::host
