#include "chartalt/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chartalt/png_io.hpp"

namespace chartalt {

namespace {

struct Canvas {
    std::size_t width, height;
    std::vector<std::uint8_t> rgb;

    Canvas(std::size_t w, std::size_t h) : width(w), height(h), rgb(w * h * 3, 255) {}

    void set(long x, long y, const host::Color& c) {
        if (x < 0 || y < 0 || x >= static_cast<long>(width) || y >= static_cast<long>(height)) return;
        std::uint8_t* p = rgb.data() + (static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)) * 3;
        p[0] = static_cast<std::uint8_t>(std::clamp(c.r, 0.0, 1.0) * 255.0);
        p[1] = static_cast<std::uint8_t>(std::clamp(c.g, 0.0, 1.0) * 255.0);
        p[2] = static_cast<std::uint8_t>(std::clamp(c.b, 0.0, 1.0) * 255.0);
    }

    void fill_rect(long x0, long y0, long x1, long y1, const host::Color& c) {
        if (x0 > x1) std::swap(x0, x1);
        if (y0 > y1) std::swap(y0, y1);
        for (long y = y0; y <= y1; ++y) {
            for (long x = x0; x <= x1; ++x) set(x, y, c);
        }
    }

    void line(long x0, long y0, long x1, long y1, const host::Color& c) {
        const long dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
        const long sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
        long err = dx + dy;
        long x = x0, y = y0;
        while (true) {
            set(x, y, c);
            if (x == x1 && y == y1) break;
            const long e2 = 2 * err;
            if (e2 >= dy) { err += dy; x += sx; }
            if (e2 <= dx) { err += dx; y += sy; }
        }
    }
};

struct DataRect {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
};

struct Viewport {
    long px0, px1, py0, py1;  // pixel bounds (py0 = top)
    DataRect data;

    long to_px(double x) const {
        const double t = (x - data.x0) / (data.x1 - data.x0 + 1e-300);
        return px0 + static_cast<long>(std::lround(t * static_cast<double>(px1 - px0)));
    }
    long to_py(double y) const {
        const double t = (y - data.y0) / (data.y1 - data.y0 + 1e-300);
        return py1 - static_cast<long>(std::lround(t * static_cast<double>(py1 - py0)));
    }
};

void expand(DataRect& r, double x, double y) {
    r.x0 = std::min(r.x0, x);
    r.x1 = std::max(r.x1, x);
    r.y0 = std::min(r.y0, y);
    r.y1 = std::max(r.y1, y);
}

DataRect data_rect(const host::Axes& ax) {
    DataRect r;
    bool any = false;
    auto seed = [&](double x, double y) {
        if (!any) {
            r = {x, x, y, y};
            any = true;
        } else {
            expand(r, x, y);
        }
    };
    for (const auto& m : ax.lines) {
        for (std::size_t i = 0; i < std::min(m.xs.size(), m.ys.size()); ++i) seed(m.xs[i], m.ys[i]);
    }
    for (const auto& m : ax.points) {
        for (std::size_t i = 0; i < std::min(m.xs.size(), m.ys.size()); ++i) seed(m.xs[i], m.ys[i]);
    }
    for (const auto& m : ax.bars) {
        for (std::size_t i = 0; i < m.values.size(); ++i) {
            if (m.horizontal) {
                seed(0.0, m.positions[i]);
                seed(m.values[i], m.positions[i]);
            } else {
                seed(m.positions[i], 0.0);
                seed(m.positions[i], m.values[i]);
            }
        }
    }
    for (const auto& m : ax.quadmeshes) {
        for (double e : m.x_edges) seed(e, m.y_edges.empty() ? 0.0 : m.y_edges.front());
        for (double e : m.y_edges) seed(m.x_edges.empty() ? 0.0 : m.x_edges.front(), e);
    }
    for (const auto& m : ax.images) {
        const double nx = static_cast<double>(m.z.size());
        const double ny = nx > 0 ? static_cast<double>(m.z[0].size()) : 0.0;
        seed(-0.5, -0.5);
        seed(nx - 0.5, ny - 0.5);
    }
    for (const auto& m : ax.contour_paths) {
        for (const auto& [vx, vy] : m.vertices) seed(vx, vy);
    }
    for (const auto& m : ax.boxes) {
        for (double v : m.values) seed(m.position, v);
    }
    if (!ax.wedges.empty()) {
        seed(-1.2, -1.2);
        seed(1.2, 1.2);
    }
    if (!any) r = {0.0, 1.0, 0.0, 1.0};
    if (ax.x.min) r.x0 = *ax.x.min;
    if (ax.x.max) r.x1 = *ax.x.max;
    if (ax.y.min) r.y0 = *ax.y.min;
    if (ax.y.max) r.y1 = *ax.y.max;
    if (r.x0 == r.x1) { r.x0 -= 0.5; r.x1 += 0.5; }
    if (r.y0 == r.y1) { r.y0 -= 0.5; r.y1 += 0.5; }
    return r;
}

host::Color colormap(double t) {
    // Dark blue -> green -> yellow ramp.
    t = std::clamp(t, 0.0, 1.0);
    if (t < 0.5) {
        const double u = t * 2.0;
        return {0.27 * (1 - u) + 0.13 * u, 0.0 * (1 - u) + 0.57 * u, 0.33 * (1 - u) + 0.55 * u};
    }
    const double u = (t - 0.5) * 2.0;
    return {0.13 * (1 - u) + 0.99 * u, 0.57 * (1 - u) + 0.91 * u, 0.55 * (1 - u) + 0.14 * u};
}

void draw_axes(Canvas& canvas, const host::Axes& ax, const Viewport& vp) {
    const host::Color frame{0.0, 0.0, 0.0};
    canvas.line(vp.px0, vp.py0, vp.px1, vp.py0, frame);
    canvas.line(vp.px0, vp.py1, vp.px1, vp.py1, frame);
    canvas.line(vp.px0, vp.py0, vp.px0, vp.py1, frame);
    canvas.line(vp.px1, vp.py0, vp.px1, vp.py1, frame);

    for (const auto& m : ax.quadmeshes) {
        const std::size_t nx = m.z.size();
        double zmin = std::numeric_limits<double>::infinity(), zmax = -zmin;
        for (const auto& col : m.z) {
            for (double v : col) {
                zmin = std::min(zmin, v);
                zmax = std::max(zmax, v);
            }
        }
        for (std::size_t i = 0; i < nx; ++i) {
            for (std::size_t j = 0; j < m.z[i].size(); ++j) {
                const double x0 = i < m.x_edges.size() ? m.x_edges[i] : static_cast<double>(i);
                const double x1 = i + 1 < m.x_edges.size() ? m.x_edges[i + 1] : static_cast<double>(i + 1);
                const double y0 = j < m.y_edges.size() ? m.y_edges[j] : static_cast<double>(j);
                const double y1 = j + 1 < m.y_edges.size() ? m.y_edges[j + 1] : static_cast<double>(j + 1);
                const double t = zmax > zmin ? (m.z[i][j] - zmin) / (zmax - zmin) : 0.0;
                canvas.fill_rect(vp.to_px(x0), vp.to_py(y1), vp.to_px(x1), vp.to_py(y0), colormap(t));
            }
        }
    }
    for (const auto& m : ax.images) {
        const std::size_t nx = m.z.size();
        double zmin = std::numeric_limits<double>::infinity(), zmax = -zmin;
        for (const auto& col : m.z) {
            for (double v : col) {
                zmin = std::min(zmin, v);
                zmax = std::max(zmax, v);
            }
        }
        for (std::size_t i = 0; i < nx; ++i) {
            for (std::size_t j = 0; j < m.z[i].size(); ++j) {
                const double t = zmax > zmin ? (m.z[i][j] - zmin) / (zmax - zmin) : 0.0;
                canvas.fill_rect(vp.to_px(static_cast<double>(i) - 0.5), vp.to_py(static_cast<double>(j) + 0.5),
                                 vp.to_px(static_cast<double>(i) + 0.5), vp.to_py(static_cast<double>(j) - 0.5),
                                 colormap(t));
            }
        }
    }
    for (const auto& m : ax.bars) {
        for (std::size_t i = 0; i < m.values.size(); ++i) {
            if (m.horizontal) {
                canvas.fill_rect(vp.to_px(0.0), vp.to_py(m.positions[i] + 0.4), vp.to_px(m.values[i]),
                                 vp.to_py(m.positions[i] - 0.4), m.color);
            } else {
                canvas.fill_rect(vp.to_px(m.positions[i] - 0.4), vp.to_py(m.values[i]),
                                 vp.to_px(m.positions[i] + 0.4), vp.to_py(0.0), m.color);
            }
        }
    }
    for (const auto& m : ax.lines) {
        for (std::size_t i = 0; i + 1 < std::min(m.xs.size(), m.ys.size()); ++i) {
            canvas.line(vp.to_px(m.xs[i]), vp.to_py(m.ys[i]), vp.to_px(m.xs[i + 1]), vp.to_py(m.ys[i + 1]),
                        m.color);
        }
    }
    for (const auto& m : ax.points) {
        for (std::size_t i = 0; i < std::min(m.xs.size(), m.ys.size()); ++i) {
            const long px = vp.to_px(m.xs[i]), py = vp.to_py(m.ys[i]);
            canvas.fill_rect(px - 1, py - 1, px + 1, py + 1, m.color);
        }
    }
    for (const auto& m : ax.contour_paths) {
        for (std::size_t i = 0; i + 1 < m.vertices.size(); ++i) {
            canvas.line(vp.to_px(m.vertices[i].first), vp.to_py(m.vertices[i].second),
                        vp.to_px(m.vertices[i + 1].first), vp.to_py(m.vertices[i + 1].second),
                        {0.2, 0.4, 0.2});
        }
    }
    for (const auto& m : ax.boxes) {
        if (m.values.empty()) continue;
        std::vector<double> sorted = m.values;
        std::sort(sorted.begin(), sorted.end());
        const auto q = [&](double f) {
            const double pos = f * static_cast<double>(sorted.size() - 1);
            const std::size_t lo = static_cast<std::size_t>(pos);
            const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
            return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
        };
        const double q1 = q(0.25), q2 = q(0.5), q3 = q(0.75);
        const long x0 = vp.to_px(m.position - 0.3), x1 = vp.to_px(m.position + 0.3);
        canvas.line(x0, vp.to_py(q1), x1, vp.to_py(q1), m.color);
        canvas.line(x0, vp.to_py(q3), x1, vp.to_py(q3), m.color);
        canvas.line(x0, vp.to_py(q2), x1, vp.to_py(q2), m.color);
        canvas.line(x0, vp.to_py(q1), x0, vp.to_py(q3), m.color);
        canvas.line(x1, vp.to_py(q1), x1, vp.to_py(q3), m.color);
        const long xc = vp.to_px(m.position);
        canvas.line(xc, vp.to_py(sorted.front()), xc, vp.to_py(q1), m.color);
        canvas.line(xc, vp.to_py(q3), xc, vp.to_py(sorted.back()), m.color);
    }
    if (!ax.wedges.empty()) {
        // Wedges drawn as radial fans around the origin.
        for (const auto& m : ax.wedges) {
            double total = 0.0;
            for (double v : m.values) total += v;
            if (total <= 0) continue;
            double angle = 0.0;
            for (std::size_t i = 0; i < m.values.size(); ++i) {
                const double frac = m.values[i] / total;
                const double a1 = angle + frac * 2.0 * 3.14159265358979323846;
                const host::Color c = i < m.colors.size() ? m.colors[i] : host::cycle_color(i);
                for (double a = angle; a <= a1; a += 0.004) {
                    canvas.line(vp.to_px(0.0), vp.to_py(0.0), vp.to_px(std::cos(a)), vp.to_py(std::sin(a)), c);
                }
                angle = a1;
            }
        }
    }
    for (const auto& r : ax.ref_lines) {
        if (r.horizontal) {
            canvas.line(vp.px0, vp.to_py(r.position), vp.px1, vp.to_py(r.position), {0.3, 0.3, 0.3});
        } else {
            canvas.line(vp.to_px(r.position), vp.py0, vp.to_px(r.position), vp.py1, {0.3, 0.3, 0.3});
        }
    }
}

}  // namespace

std::vector<std::uint8_t> render_figure_png(const host::Figure& fig) {
    const std::size_t width = static_cast<std::size_t>(std::max(64.0, fig.width_inches * fig.dpi));
    const std::size_t height = static_cast<std::size_t>(std::max(48.0, fig.height_inches * fig.dpi));
    Canvas canvas(width, height);

    const int rows = std::max(1, fig.rows), cols = std::max(1, fig.cols);
    const long cell_w = static_cast<long>(width) / cols;
    const long cell_h = static_cast<long>(height) / rows;
    const long margin_x = std::max<long>(8, cell_w / 10);
    const long margin_y = std::max<long>(8, cell_h / 10);

    for (std::size_t i = 0; i < fig.subplot_count(); ++i) {
        const int r = static_cast<int>(i) / cols;
        const int c = static_cast<int>(i) % cols;
        const host::Axes& ax = fig.subplot(static_cast<int>(i));
        Viewport vp;
        vp.px0 = c * cell_w + margin_x;
        vp.px1 = (c + 1) * cell_w - margin_x;
        vp.py0 = r * cell_h + margin_y;
        vp.py1 = (r + 1) * cell_h - margin_y;
        vp.data = data_rect(ax);
        draw_axes(canvas, ax, vp);
        if (ax.twin) draw_axes(canvas, *ax.twin, vp);
    }

    return png::encode(width, height, canvas.rgb);
}

}  // namespace chartalt
