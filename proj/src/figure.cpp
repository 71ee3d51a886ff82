#include "chartalt/figure.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "chartalt/errors.hpp"

namespace chartalt::host {

namespace {

struct NamedColor {
    const char* name;
    Color color;
};

// The default cycle plus common single-letter colors.
constexpr std::array<NamedColor, 10> kCycle = {{
    {"C0", {0x1f / 255.0, 0x77 / 255.0, 0xb4 / 255.0}},
    {"C1", {0xff / 255.0, 0x7f / 255.0, 0x0e / 255.0}},
    {"C2", {0x2c / 255.0, 0xa0 / 255.0, 0x2c / 255.0}},
    {"C3", {0xd6 / 255.0, 0x27 / 255.0, 0x28 / 255.0}},
    {"C4", {0x94 / 255.0, 0x67 / 255.0, 0xbd / 255.0}},
    {"C5", {0x8c / 255.0, 0x56 / 255.0, 0x4b / 255.0}},
    {"C6", {0xe3 / 255.0, 0x77 / 255.0, 0xc2 / 255.0}},
    {"C7", {0x7f / 255.0, 0x7f / 255.0, 0x7f / 255.0}},
    {"C8", {0xbc / 255.0, 0xbd / 255.0, 0x22 / 255.0}},
    {"C9", {0x17 / 255.0, 0xbe / 255.0, 0xcf / 255.0}},
}};

struct Registry {
    std::vector<std::unique_ptr<Figure>> figures;
    int current_subplot = 0;
    std::size_t created = 0;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Color cycle_color(std::size_t index) { return kCycle[index % kCycle.size()].color; }

Color parse_color(const std::string& spec) {
    if (spec.size() == 7 && spec[0] == '#') {
        unsigned r = 0, g = 0, b = 0;
        if (std::sscanf(spec.c_str() + 1, "%02x%02x%02x", &r, &g, &b) == 3) {
            return {r / 255.0, g / 255.0, b / 255.0};
        }
    }
    if (spec.size() == 2 && spec[0] == 'C' && spec[1] >= '0' && spec[1] <= '9') {
        return cycle_color(static_cast<std::size_t>(spec[1] - '0'));
    }
    static const std::array<NamedColor, 8> named = {{
        {"black", {0, 0, 0}},
        {"white", {1, 1, 1}},
        {"red", {0.84, 0.15, 0.16}},
        {"green", {0.17, 0.63, 0.17}},
        {"blue", {0.12, 0.47, 0.71}},
        {"orange", {1.0, 0.5, 0.05}},
        {"yellow", {0.9, 0.9, 0.13}},
        {"gray", {0.5, 0.5, 0.5}},
    }};
    for (const auto& n : named) {
        if (spec == n.name) return n.color;
    }
    return kCycle[0].color;
}

LineMark& Axes::plot(std::vector<double> xs, std::vector<double> ys, std::string label) {
    LineMark m;
    m.xs = std::move(xs);
    m.ys = std::move(ys);
    m.color = cycle_color(next_color_++);
    m.label = std::move(label);
    lines.push_back(std::move(m));
    if (!lines.back().label.empty()) legend.push_back({lines.back().label, lines.back().color});
    return lines.back();
}

PointMark& Axes::scatter(std::vector<double> xs, std::vector<double> ys, std::string label) {
    PointMark m;
    m.xs = std::move(xs);
    m.ys = std::move(ys);
    m.color = cycle_color(next_color_++);
    m.label = std::move(label);
    points.push_back(std::move(m));
    if (!points.back().label.empty()) legend.push_back({points.back().label, points.back().color});
    return points.back();
}

BarMark& Axes::bar(std::vector<std::string> categories, std::vector<double> values,
                   bool horizontal, std::string label) {
    BarMark m;
    m.values = std::move(values);
    m.horizontal = horizontal;
    m.color = cycle_color(next_color_++);
    m.label = std::move(label);
    m.positions.resize(m.values.size());
    for (std::size_t i = 0; i < m.positions.size(); ++i) m.positions[i] = static_cast<double>(i);
    // Category labels become ticks on the independent axis.
    Axis& ind = horizontal ? y : x;
    ind.ticks.clear();
    for (std::size_t i = 0; i < categories.size(); ++i) {
        ind.ticks.push_back({static_cast<double>(i), categories[i]});
    }
    bars.push_back(std::move(m));
    if (!bars.back().label.empty()) legend.push_back({bars.back().label, bars.back().color});
    return bars.back();
}

WedgeMark& Axes::pie(std::vector<double> values, std::vector<std::string> labels) {
    WedgeMark m;
    m.values = std::move(values);
    m.labels = std::move(labels);
    for (std::size_t i = 0; i < m.values.size(); ++i) m.colors.push_back(cycle_color(i));
    wedges.push_back(std::move(m));
    return wedges.back();
}

QuadMeshMark& Axes::pcolormesh(std::vector<double> x_edges, std::vector<double> y_edges,
                               std::vector<std::vector<double>> z) {
    QuadMeshMark m;
    m.x_edges = std::move(x_edges);
    m.y_edges = std::move(y_edges);
    m.z = std::move(z);
    quadmeshes.push_back(std::move(m));
    return quadmeshes.back();
}

ImageMark& Axes::imshow(std::vector<std::vector<double>> pixel_rows) {
    // Input rows are row-major; stored column-major so z[ix][iy] indexes by
    // (x, y) like every other mark.
    ImageMark m;
    const std::size_t ny = pixel_rows.size();
    const std::size_t nx = ny ? pixel_rows[0].size() : 0;
    m.z.assign(nx, std::vector<double>(ny, 0.0));
    for (std::size_t row = 0; row < ny; ++row) {
        for (std::size_t col = 0; col < nx && col < pixel_rows[row].size(); ++col) {
            m.z[col][row] = pixel_rows[row][col];
        }
    }
    // imshow pins the axes to the pixel extent.
    x.min = -0.5;
    x.max = static_cast<double>(nx) - 0.5;
    y.min = -0.5;
    y.max = static_cast<double>(ny) - 0.5;
    images.push_back(std::move(m));
    return images.back();
}

BoxMark& Axes::boxplot(std::vector<double> values) {
    BoxMark m;
    m.position = static_cast<double>(boxes.size());
    m.values = std::move(values);
    m.color = cycle_color(boxes.size());
    boxes.push_back(std::move(m));
    return boxes.back();
}

ContourPathMark& Axes::contour_path(double level, std::vector<std::pair<double, double>> vertices) {
    contour_paths.push_back({level, std::move(vertices)});
    return contour_paths.back();
}

void Axes::annotate(std::string text, double ax, double ay) { annotations.push_back({std::move(text), ax, ay}); }
void Axes::axhline(double y_value) { ref_lines.push_back({true, y_value}); }
void Axes::axvline(double x_value) { ref_lines.push_back({false, x_value}); }

void Axes::set_xticks(std::vector<double> positions, std::vector<std::string> labels) {
    x.ticks.clear();
    for (std::size_t i = 0; i < positions.size(); ++i) {
        x.ticks.push_back({positions[i], i < labels.size() ? labels[i] : std::string{}});
    }
}

void Axes::set_yticks(std::vector<double> positions, std::vector<std::string> labels) {
    y.ticks.clear();
    for (std::size_t i = 0; i < positions.size(); ++i) {
        y.ticks.push_back({positions[i], i < labels.size() ? labels[i] : std::string{}});
    }
}

Axes& Axes::twinx() {
    if (!twin) twin = std::make_unique<Axes>();
    return *twin;
}

Figure::Figure(int r, int c) : rows(r), cols(c) {
    const int n = rows * cols;
    for (int i = 0; i < n; ++i) subplots_.push_back(std::make_unique<Axes>());
}

Figure& figure(int rows, int cols) {
    auto& reg = registry();
    reg.figures.push_back(std::make_unique<Figure>(rows, cols));
    reg.current_subplot = 0;
    ++reg.created;
    return *reg.figures.back();
}

Figure* current_figure() {
    auto& reg = registry();
    return reg.figures.empty() ? nullptr : reg.figures.back().get();
}

Axes& gca() {
    Figure* f = current_figure();
    if (!f) throw NoFigureError();
    return f->subplot(registry().current_subplot);
}

void select_subplot(int index_row_major) {
    Figure* f = current_figure();
    if (!f) throw NoFigureError();
    if (index_row_major < 0 || static_cast<std::size_t>(index_row_major) >= f->subplot_count()) {
        throw Error("subplot index out of range");
    }
    registry().current_subplot = index_row_major;
}

void close_all() {
    registry().figures.clear();
    registry().current_subplot = 0;
}

std::size_t figures_created() { return registry().created; }

}  // namespace chartalt::host
