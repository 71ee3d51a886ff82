#include <doctest.h>

#include "chartalt/chart_type.hpp"
#include "gallery.hpp"

using namespace chartalt;

namespace {

SubplotFacts snapshot_first(host::Figure& fig) {
    const FigureFacts facts = snapshot_figure(fig);
    REQUIRE_FALSE(facts.subplots.empty());
    return facts.subplots[0];
}

}  // namespace

TEST_CASE("the twelve gallery reconstructions classify to their captioned types") {
    for (const auto& entry : gallery::entries()) {
        CAPTURE(entry.name);
        host::close_all();
        host::Figure& fig = entry.build();
        const FigureFacts facts = snapshot_figure(fig);
        for (const auto& subplot : facts.subplots) {
            CHECK(chart_type_id(infer_chart_type(subplot)) == std::string(entry.expected_type));
        }
    }
    host::close_all();
}

TEST_CASE("decision table unit cases") {
    SUBCASE("scatter: points without lines on numeric axes") {
        host::close_all();
        host::Figure& fig = host::figure();
        fig.subplot(0).scatter({1, 2, 3, 4}, {4, 2, 6, 1});
        CHECK(infer_chart_type(snapshot_first(fig)) == ChartType::scatter);
    }
    SUBCASE("line wins over points when both are present") {
        host::close_all();
        host::Figure& fig = host::figure();
        fig.subplot(0).plot({1, 2, 3}, {1, 4, 9});
        fig.subplot(0).scatter({1, 2, 3}, {1, 4, 9});
        CHECK(infer_chart_type(snapshot_first(fig)) == ChartType::line);
    }
    SUBCASE("blank when no marks") {
        host::close_all();
        host::Figure& fig = host::figure();
        const auto sp = snapshot_first(fig);
        CHECK(sp.marks.empty());
        CHECK(infer_chart_type(sp) == ChartType::blank);
    }
    SUBCASE("wedges imply pie") {
        host::close_all();
        host::Figure& fig = host::figure();
        fig.subplot(0).pie({30, 30, 40}, {"a", "b", "c"});
        CHECK(infer_chart_type(snapshot_first(fig)) == ChartType::pie);
    }
    SUBCASE("quadmesh with real edges is a heatmap, pixel extent is an image") {
        host::close_all();
        host::Figure& fig = host::figure();
        fig.subplot(0).pcolormesh({0, 1, 2}, {0, 1}, {{1.0}, {2.0}});
        CHECK(infer_chart_type(snapshot_first(fig)) == ChartType::heatmap);

        host::close_all();
        host::Figure& fig2 = host::figure();
        fig2.subplot(0).imshow({{1.0, 2.0}, {3.0, 4.0}});
        CHECK(infer_chart_type(snapshot_first(fig2)) == ChartType::image);
    }
    SUBCASE("single rectangle is not a bar chart") {
        host::close_all();
        host::Figure& fig = host::figure();
        fig.subplot(0).bar({"only"}, {3.0});
        CHECK(infer_chart_type(snapshot_first(fig)) == ChartType::unknown);
    }
    SUBCASE("polar lines are radial") {
        host::close_all();
        host::Figure& fig = host::figure();
        fig.subplot(0).polar = true;
        fig.subplot(0).plot({0, 1, 2}, {1, 2, 3});
        CHECK(infer_chart_type(snapshot_first(fig)) == ChartType::radial_line);
    }
    SUBCASE("degenerate point bands are strips even without categorical ticks") {
        host::close_all();
        host::Figure& fig = host::figure();
        fig.subplot(0).scatter({1, 2, 3, 4, 5}, {0, 0, 0, 0, 0});
        CHECK(infer_chart_type(snapshot_first(fig)) == ChartType::strip);
    }
    host::close_all();
}

TEST_CASE("classification is deterministic and total") {
    host::close_all();
    host::Figure& fig = gallery::line_figure();
    const auto sp = snapshot_first(fig);
    const ChartType first = infer_chart_type(sp);
    for (int i = 0; i < 10; ++i) CHECK(infer_chart_type(sp) == first);
    host::close_all();
}

TEST_CASE("mixed bar and line overlay returns the higher-priority type with a flag") {
    host::close_all();
    host::Figure& fig = host::figure();
    fig.subplot(0).bar({"a", "b", "c"}, {1, 2, 3});
    fig.subplot(0).plot({0, 1, 2}, {3, 2, 1});
    const auto sp = snapshot_first(fig);
    const auto detailed = infer_chart_type_detailed(sp);
    CHECK(detailed.type == ChartType::bar);
    CHECK(detailed.mixed_type);
    host::close_all();
}
