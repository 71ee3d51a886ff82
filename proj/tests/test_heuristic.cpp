#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "chartalt/errors.hpp"
#include "chartalt/heuristic.hpp"
#include "gallery.hpp"

using namespace chartalt;

namespace {

std::string read_fixture(const std::string& relative) {
    const std::string path = std::string(CHARTALT_FIXTURE_DIR) + "/" + relative;
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixture " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
}

AltText generate(host::Figure& fig, const DescriptionOptions& options) {
    const FigureFacts facts = snapshot_figure(fig);
    host::close_all();
    return generate_alt_text(facts, options);
}

// Synthetic figure used by the property tests: a deterministic random chart
// of the given family.
host::Figure& random_figure(std::mt19937& rng) {
    const int kind = static_cast<int>(rng() % 7);
    auto value = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() % 10000) / 10000.0);
    };
    const std::size_t n = 3 + rng() % 30;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = static_cast<double>(i) + value(0.0, 0.4);
        ys[i] = value(-50.0, 50.0);
    }
    const bool multi = rng() % 4 == 0;
    host::Figure& fig = multi ? host::figure(1, 2) : host::figure();
    const int subplots = multi ? 2 : 1;
    for (int s = 0; s < subplots; ++s) {
        host::Axes& ax = fig.subplot(s);
        if (rng() % 2) ax.title = "chart " + std::to_string(rng() % 100);
        switch (kind) {
            case 0: ax.plot(xs, ys, rng() % 2 ? "series a" : ""); break;
            case 1: ax.scatter(xs, ys); break;
            case 2: {
                std::vector<std::string> cats;
                std::vector<double> vals;
                for (std::size_t i = 0; i < 5; ++i) {
                    cats.push_back("cat" + std::to_string(i));
                    vals.push_back(value(0.0, 100.0));
                }
                ax.bar(cats, vals, rng() % 2 == 0);
                break;
            }
            case 3: {
                std::vector<double> vals;
                std::vector<std::string> labels;
                for (std::size_t i = 0; i < 4; ++i) {
                    vals.push_back(value(1.0, 50.0));
                    labels.push_back("slice" + std::to_string(i));
                }
                ax.pie(vals, labels);
                break;
            }
            case 4: ax.boxplot(ys); break;
            case 5: {
                std::vector<std::vector<double>> z(3, std::vector<double>(4));
                for (auto& col : z) {
                    for (auto& v : col) v = value(0.0, 9.0);
                }
                ax.pcolormesh({0, 1, 2, 3}, {0, 1, 2, 3, 4}, z);
                break;
            }
            default: break;  // blank subplot
        }
    }
    return fig;
}

}  // namespace

TEST_CASE("golden captions reproduce the published examples byte for byte") {
    host::close_all();
    SUBCASE("four Anscombe subplots with default statistics") {
        DescriptionOptions opts;
        opts.desc_level = 3;
        const AltText alt = generate(gallery::anscombe_subplots_figure(), opts);
        CHECK(alt.text == read_fixture("captions/anscombe_default_l3.txt"));
    }
    SUBCASE("four Anscombe subplots with stats=[linear_fit, mean, std]") {
        DescriptionOptions opts;
        opts.desc_level = 3;
        opts.stats = {{StatKind::linear_fit, StatKind::mean, StatKind::std_dev}};
        const AltText alt = generate(gallery::anscombe_subplots_figure(), opts);
        CHECK(alt.text == read_fixture("captions/anscombe_custom_l3.txt"));
    }
    SUBCASE("blank plot") {
        DescriptionOptions opts;
        opts.desc_level = 3;
        const AltText alt = generate(gallery::blank_figure(), opts);
        CHECK(alt.text == read_fixture("captions/blank_l3.txt"));
    }
    SUBCASE("boxplot of the quartet") {
        DescriptionOptions opts;
        opts.desc_level = 3;
        const AltText alt = generate(gallery::boxplot_figure(), opts);
        CHECK(alt.text == read_fixture("captions/boxplot_l3.txt"));
    }
    SUBCASE("horizontal bar chart with explicit stats") {
        DescriptionOptions opts;
        opts.desc_level = 2;
        opts.stats = {{StatKind::num_pts, StatKind::min, StatKind::max, StatKind::mean}};
        const AltText alt = generate(gallery::bar_figure(), opts);
        CHECK(alt.text == read_fixture("captions/bar_l2.txt"));
    }
    SUBCASE("bikes and sunshine line chart") {
        DescriptionOptions opts;
        opts.desc_level = 3;
        const AltText alt = generate(gallery::line_figure(), opts);
        CHECK(alt.text == read_fixture("captions/line_l3.txt"));
        CHECK(alt.text.find("has a minimum value of y=-46.08 at x=12") != std::string::npos);
        CHECK(alt.text.find("a maximum value of y=40.93 at x=7") != std::string::npos);
        CHECK(alt.text.find("have a correlation of 0.95.") != std::string::npos);
        CHECK(alt.text.find(
                  "Hours of sunshine strictly increase up to their max at x=7, then strictly "
                  "decrease.") != std::string::npos);
    }
    host::close_all();
}

TEST_CASE("pie caption lists slices at L1 and trends percentages") {
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 3;
    const AltText alt = generate(gallery::pie_figure(), opts);
    CHECK(alt.text.find("A pie chart titled 'percentage of annual sunshine'. There are 12 slices: "
                        "jan (") != std::string::npos);
    CHECK(alt.text.find("The data has a standard deviation of x=") != std::string::npos);
    // Percentages are the trend coordinates.
    CHECK(alt.text.find("The data strictly increase up to their max at x=14.43, then strictly "
                        "decrease.") != std::string::npos);
    host::close_all();
}

TEST_CASE("strip caption uses positional labels and the numeric axis") {
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 3;
    const AltText alt = generate(gallery::strip_figure(), opts);
    CHECK(alt.text.find("A strip plot. Random gaussian x is plotted on the x-axis from -10 to 8 "
                        "using a linear scale and the y-axis ranges from the blue dots to the "
                        "orange dots using a categorical scale.") != std::string::npos);
    CHECK(alt.text.find("Strip 1 has 350 points, a median of x=") != std::string::npos);
    CHECK(alt.text.find("Strip 2 has 250 points, a median of x=") != std::string::npos);
    // Strip charts carry no L3 segment.
    CHECK(alt.segments[0].l3.empty());
    host::close_all();
}

TEST_CASE("heatmap caption reports grid shape, z-axis, and cell locations") {
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 3;
    const AltText alt = generate(gallery::heatmap_figure(), opts);
    CHECK(alt.text.find("A 7x6 heatmap titled 'number of points from combined gaussians'. The "
                        "x-axis ranges from -8 to 6, the y-axis ranges from -4 to 8, and number "
                        "of gaussian points is plotted on the z-axis from 0 to ") !=
          std::string::npos);
    CHECK(alt.text.find(", all using linear scales.") != std::string::npos);
    CHECK(alt.text.find("The data has a minimum value of z=0 at (-8, -4)") != std::string::npos);
    CHECK(alt.segments[0].l3.empty());
    host::close_all();
}

TEST_CASE("contour caption lists line values and the max contour center") {
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 3;
    const AltText alt = generate(gallery::contour_figure(), opts);
    CHECK(alt.text.find("A contour plot titled 'number of points from combined gaussians'.") !=
          std::string::npos);
    CHECK(alt.text.find("9 contour lines are plotted with values 0, 0, 8, 16, 24, 32, 32, 40, "
                        "and 48.") != std::string::npos);
    CHECK(alt.text.find("The max contour is centered around (-4.803, 4.432).") != std::string::npos);
    host::close_all();
}

TEST_CASE("image caption uses pixel-index locations") {
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 2;
    const AltText alt = generate(gallery::image_figure(), opts);
    CHECK(alt.text.find("A 50x50 image titled 'z^3 + 0.66 iterations before reaching a threshold "
                        "of 2'.") != std::string::npos);
    CHECK(alt.text.find("The x-axis ranges from -0.5 to 49.5") != std::string::npos);
    CHECK(alt.text.find("a minimum value of z=0 at (0, 0)") != std::string::npos);
    host::close_all();
}

TEST_CASE("radial line caption") {
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 3;
    const AltText alt = generate(gallery::radial_line_figure(), opts);
    CHECK(alt.text.find("A radial line plot titled 'avg. Monthly hours of sunshine in seattle'.") !=
          std::string::npos);
    CHECK(alt.text.find("Avg. Hours of sunshine has a minimum value of y=52 at x=dec, a maximum "
                        "value of y=312 at x=july, and an average of y=180.2.") != std::string::npos);
    host::close_all();
}

TEST_CASE("scatter caption includes both means, the fit, and outlier counts") {
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 2;
    const AltText alt = generate(gallery::scatter_figure(), opts);
    CHECK(alt.text.find("A scatter plot titled 'points from 2d gaussian distributions'.") !=
          std::string::npos);
    CHECK(alt.text.find("The blue dots is plotted in dark blue and the orange dots is plotted in "
                        "orange.") != std::string::npos);
    CHECK(alt.text.find("The blue dots has 350 points, an average of x=") != std::string::npos);
    CHECK(alt.text.find("a linear fit of y=") != std::string::npos);
    host::close_all();
}

TEST_CASE("level prefix property, determinism, and table caps over random figures") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        host::close_all();
        host::Figure& fig = random_figure(rng);
        const FigureFacts facts = snapshot_figure(fig);
        host::close_all();

        DescriptionOptions o1, o2, o3;
        o1.desc_level = 1;
        o2.desc_level = 2;
        o3.desc_level = 3;
        o3.include_table = true;
        o3.max_table_rows = 5;
        o3.max_table_cols = 3;

        const AltText a1 = generate_alt_text(facts, o1);
        const AltText a2 = generate_alt_text(facts, o2);
        const AltText a3 = generate_alt_text(facts, o3);

        REQUIRE(a1.segments.size() == a3.segments.size());
        for (std::size_t s = 0; s < a1.segments.size(); ++s) {
            auto joined = [](const SubplotSegments& seg, int level) {
                std::string t = seg.l1;
                if (level >= 2 && !seg.l2.empty()) t += (t.empty() ? "" : " ") + seg.l2;
                if (level >= 3 && !seg.l3.empty()) t += (t.empty() ? "" : " ") + seg.l3;
                return t;
            };
            const std::string t1 = joined(a1.segments[s], 1);
            const std::string t2 = joined(a2.segments[s], 2);
            const std::string t3 = joined(a3.segments[s], 3);
            REQUIRE(t2.substr(0, t1.size()) == t1);
            REQUIRE(t3.substr(0, t2.size()) == t2);
        }

        // Deterministic across runs.
        const AltText again = generate_alt_text(facts, o3);
        REQUIRE(again.text == a3.text);
        REQUIRE(again.table_markdown == a3.table_markdown);

        if (a3.table_markdown) {
            std::istringstream lines(*a3.table_markdown);
            std::string line;
            int rows = 0;
            std::size_t max_cells = 0;
            while (std::getline(lines, line)) {
                if (line.empty()) { rows = -1; continue; }  // table boundary
                if (rows >= 0) ++rows;
                std::size_t cells = 0;
                for (char c : line) {
                    if (c == '|') ++cells;
                }
                if (cells > 0) max_cells = std::max(max_cells, cells - 1);
            }
            // Header + separator + body rows + optional ellipsis row.
            CHECK(max_cells <= static_cast<std::size_t>(o3.max_table_cols) + 1);
        }
    }
    host::close_all();
}

TEST_CASE("text equals the concatenation of segments") {
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 3;
    const FigureFacts facts = snapshot_figure(gallery::anscombe_subplots_figure());
    host::close_all();
    const AltText alt = generate_alt_text(facts, opts);
    std::string joined;
    for (std::size_t i = 0; i < alt.segments.size(); ++i) {
        const auto& seg = alt.segments[i];
        std::string segment_text = seg.l1;
        if (!seg.l2.empty()) segment_text += " " + seg.l2;
        if (!seg.l3.empty()) segment_text += " " + seg.l3;
        if (i) joined += "\n";
        joined += segment_text;
    }
    CHECK(joined == alt.text);
}

TEST_CASE("data table golden for the bikes/sunshine chart") {
    host::close_all();
    const FigureFacts facts = snapshot_figure(gallery::line_figure());
    host::close_all();
    const std::string table = render_data_table(facts.subplots[0], 20, 8);
    std::istringstream lines(table);
    std::string line;
    std::getline(lines, line);
    CHECK(line ==
          "| month | # bikes crossing fremont bridge (change from yearly average (%)) | hours of "
          "sunshine (change from yearly average (%)) |");
    std::getline(lines, line);
    CHECK(line == "| --- | --- | --- |");
    std::getline(lines, line);
    CHECK(line == "| 0 | -32.52 | -61.72 |");
    int body = 1;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++body;
    }
    CHECK(body == 12);
}

TEST_CASE("table truncation appends ellipsis markers") {
    host::close_all();
    host::Figure& fig = host::figure();
    std::vector<double> xs(100), ys(100);
    for (std::size_t i = 0; i < 100; ++i) {
        xs[i] = static_cast<double>(i);
        ys[i] = static_cast<double>(i % 13);
    }
    fig.subplot(0).plot(xs, ys);
    const FigureFacts facts = snapshot_figure(fig);
    host::close_all();
    const std::string table = render_data_table(facts.subplots[0], 20, 8);
    std::istringstream lines(table);
    std::string line;
    int body = 0;
    std::string last;
    std::getline(lines, line);  // header
    std::getline(lines, line);  // separator
    while (std::getline(lines, line)) {
        if (!line.empty()) {
            ++body;
            last = line;
        }
    }
    CHECK(body == 21);  // 20 rows + ellipsis row
    CHECK(last.find("…") != std::string::npos);
}

TEST_CASE("blank subplot has no tabular data") {
    host::close_all();
    const FigureFacts facts = snapshot_figure(gallery::blank_figure());
    host::close_all();
    CHECK_THROWS_AS(render_data_table(facts.subplots[0], 20, 8), NoTabularDataError);
}

TEST_CASE("desc_level 1 output is the L1 prefix of desc_level 3 output") {
    host::close_all();
    const FigureFacts facts = snapshot_figure(gallery::line_figure());
    host::close_all();
    DescriptionOptions o1, o3;
    o1.desc_level = 1;
    o3.desc_level = 3;
    const AltText a1 = generate_alt_text(facts, o1);
    const AltText a3 = generate_alt_text(facts, o3);
    CHECK(a3.text.substr(0, a1.text.size()) == a1.text);
}

TEST_CASE("color encodings can be disabled") {
    host::close_all();
    const FigureFacts facts = snapshot_figure(gallery::line_figure());
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 1;
    opts.include_color_encodings = false;
    const AltText alt = generate_alt_text(facts, opts);
    CHECK(alt.text.find("is plotted in dark blue") == std::string::npos);
}

TEST_CASE("untitled single-point series renders a single-stat sentence") {
    host::close_all();
    host::Figure& fig = host::figure();
    fig.subplot(0).plot({0}, {5.0});
    const FigureFacts facts = snapshot_figure(fig);
    host::close_all();
    DescriptionOptions opts;
    opts.desc_level = 2;
    opts.stats = {{StatKind::min}};
    const AltText alt = generate_alt_text(facts, opts);
    CHECK(alt.text.find("The data has a minimum value of y=5 at x=0.") != std::string::npos);
}
