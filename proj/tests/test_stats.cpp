#include <doctest.h>

#include <algorithm>
#include <random>

#include "chartalt/errors.hpp"
#include "chartalt/stats.hpp"
#include "chartalt/text_format.hpp"
#include "gallery.hpp"

using namespace chartalt;

namespace {

SeriesFacts series_of(std::vector<double> xs, std::vector<double> ys) {
    SeriesFacts s;
    s.x_values = std::move(xs);
    s.y_values = std::move(ys);
    return s;
}

SeriesFacts values_only(std::vector<double> ys) {
    std::vector<double> xs(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
    return series_of(std::move(xs), std::move(ys));
}

}  // namespace

TEST_CASE("Anscombe quartet statistics render to the published values") {
    const auto s1 = series_of(gallery::kAnscombeX123, gallery::kAnscombeY1);
    const auto s2 = series_of(gallery::kAnscombeX123, gallery::kAnscombeY2);
    const auto s3 = series_of(gallery::kAnscombeX123, gallery::kAnscombeY3);
    const auto s4 = series_of(gallery::kAnscombeX4, gallery::kAnscombeY4);

    SUBCASE("means") {
        CHECK(format_number(compute_statistic(s1, StatKind::mean).values[0]) == "7.501");
        CHECK(format_number(compute_statistic(s2, StatKind::mean).values[0]) == "7.501");
        CHECK(format_number(compute_statistic(s3, StatKind::mean).values[0]) == "7.5");
        CHECK(format_number(compute_statistic(s4, StatKind::mean).values[0]) == "7.501");
    }
    SUBCASE("population standard deviation") {
        CHECK(format_number(compute_statistic(s1, StatKind::std_dev).values[0]) == "1.937");
        CHECK(format_number(compute_statistic(s2, StatKind::std_dev).values[0]) == "1.937");
        CHECK(format_number(compute_statistic(s3, StatKind::std_dev).values[0]) == "1.936");
        CHECK(format_number(compute_statistic(s4, StatKind::std_dev).values[0]) == "1.936");
    }
    SUBCASE("least squares fits") {
        auto [m1, b1] = linear_fit(s1.x_values, s1.y_values);
        CHECK(format_number(m1) == "0.5001");
        CHECK(format_number(b1) == "3");
        auto [m2, b2] = linear_fit(s2.x_values, s2.y_values);
        CHECK(format_number(m2) == "0.5");
        CHECK(format_number(b2) == "3.001");
        auto [m3, b3] = linear_fit(s3.x_values, s3.y_values);
        CHECK(format_number(m3) == "0.4997");
        CHECK(format_number(b3) == "3.002");
        auto [m4, b4] = linear_fit(s4.x_values, s4.y_values);
        CHECK(format_number(m4) == "0.4999");
        CHECK(format_number(b4) == "3.002");
    }
    SUBCASE("medians and interquartile ranges") {
        const char* medians[4] = {"7.58", "8.14", "7.11", "7.04"};
        const char* iqrs[4] = {"2.255", "2.255", "1.73", "2.02"};
        const SeriesFacts* all[4] = {&s1, &s2, &s3, &s4};
        for (int i = 0; i < 4; ++i) {
            CHECK(format_number(compute_statistic(*all[i], StatKind::median).values[0]) == medians[i]);
            CHECK(format_number(compute_statistic(*all[i], StatKind::iqr).values[0]) == iqrs[i]);
        }
    }
    SUBCASE("Tukey outliers") {
        CHECK(detect_outliers(s1, ChartType::boxplot).values.empty());
        const auto o2 = detect_outliers(s2, ChartType::boxplot);
        REQUIRE(o2.values.size() == 1);
        CHECK(format_number(o2.values[0]) == "3.1");
        const auto o3 = detect_outliers(s3, ChartType::boxplot);
        REQUIRE(o3.values.size() == 1);
        CHECK(format_number(o3.values[0]) == "12.74");
        const auto o4 = detect_outliers(s4, ChartType::boxplot);
        REQUIRE(o4.values.size() == 1);
        CHECK(format_number(o4.values[0]) == "12.5");
    }
    SUBCASE("min and max carry locations") {
        const auto mn = compute_statistic(s1, StatKind::min);
        CHECK(mn.values[0] == 4.26);
        CHECK(mn.locations[0] == 4);
        const auto mx = compute_statistic(s1, StatKind::max);
        CHECK(mx.values[0] == 10.84);
        CHECK(mx.locations[0] == 12);
    }
}

TEST_CASE("single-point series: min = max = mean") {
    const auto s = series_of({0}, {5.0});
    CHECK(compute_statistic(s, StatKind::min).values[0] == 5.0);
    CHECK(compute_statistic(s, StatKind::max).values[0] == 5.0);
    CHECK(compute_statistic(s, StatKind::mean).values[0] == 5.0);
    CHECK(compute_statistic(s, StatKind::min).locations[0] == 0);
}

TEST_CASE("linear_fit exact line and degenerate input") {
    auto [m, b] = linear_fit({0, 1, 2, 3, 4}, {1, 3, 5, 7, 9});
    CHECK(m == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(linear_fit({2, 2, 2}, {1, 2, 3}), DegenerateFitError);
}

TEST_CASE("least squares satisfies the normal equations") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 40;
        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = static_cast<double>(rng() % 1000) / 10.0 + (i == 0 ? 0.0 : 0.001 * i);
            ys[i] = static_cast<double>(rng() % 1000) / 10.0 - 50.0;
        }
        xs[0] += 1.0;  // guard against all-equal xs
        const auto [m, b] = linear_fit(xs, ys);
        double r_sum = 0.0, rx_sum = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = ys[i] - (m * xs[i] + b);
            r_sum += r;
            rx_sum += r * xs[i];
            scale += std::abs(ys[i]) + std::abs(xs[i] * ys[i]);
        }
        scale = std::max(scale, 1.0);
        CHECK(std::abs(r_sum) / scale < 1e-9);
        CHECK(std::abs(rx_sum) / scale < 1e-9);
    }
}

TEST_CASE("pearson correlation published value and properties") {
    CHECK(format_number(pearson_correlation(gallery::kBikesPct, gallery::kSunshinePct)) == "0.95");

    SUBCASE("self correlation and antisymmetry") {
        const std::vector<double> a = {1, 2, 4, 8, 9};
        std::vector<double> neg = a;
        for (auto& v : neg) v = -v;
        CHECK(pearson_correlation(a, a) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(pearson_correlation(a, neg) == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("symmetry and affine invariance") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 3 + rng() % 20;
            std::vector<double> a(n), b(n);
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = static_cast<double>(rng() % 997);
                b[i] = static_cast<double>(rng() % 991);
            }
            a[0] += 1;  // ensure variance
            b[0] += 2;
            const double r = pearson_correlation(a, b);
            CHECK(pearson_correlation(b, a) == doctest::Approx(r).epsilon(1e-12));
            std::vector<double> scaled = a;
            for (auto& v : scaled) v = 3.5 * v + 11.0;
            CHECK(pearson_correlation(scaled, b) == doctest::Approx(r).epsilon(1e-12));
        }
    }
    SUBCASE("zero variance throws") {
        CHECK_THROWS_AS(pearson_correlation({1, 1, 1}, {1, 2, 3}), DegenerateFitError);
    }
}

TEST_CASE("outliers: scatter z-score rule and degenerate inputs") {
    SUBCASE("constant series has no outliers") {
        CHECK(detect_outliers(values_only({4, 4, 4, 4, 4}), ChartType::boxplot).values.empty());
    }
    SUBCASE("order invariance") {
        std::vector<double> v = gallery::kAnscombeY2;
        auto shuffled = v;
        std::mt19937 rng(3);
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto a = detect_outliers(values_only(v), ChartType::boxplot).values;
        auto b = detect_outliers(values_only(shuffled), ChartType::boxplot).values;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
    SUBCASE("scatter flags points beyond 3 sigma in either axis") {
        std::vector<double> xs(50, 0.0), ys(50, 0.0);
        for (std::size_t i = 0; i < 50; ++i) {
            xs[i] = static_cast<double>(i % 10);
            ys[i] = static_cast<double>(i % 7);
        }
        SeriesFacts s = series_of(xs, ys);
        CHECK(detect_outliers(s, ChartType::scatter).values.empty());
        s.x_values[10] = 1000.0;
        const auto r = detect_outliers(s, ChartType::scatter);
        REQUIRE(r.indices.size() == 1);
        CHECK(r.indices[0] == 10);
    }
}

TEST_CASE("trend detection") {
    SUBCASE("monotone increase") {
        const auto t = detect_trend(values_only({1, 2, 3, 4}));
        CHECK(t.direction == TrendSummary::Direction::increase);
        CHECK(t.stability == TrendSummary::Stability::strict);
        CHECK(t.direction_changes == 0);
        CHECK(t.overall_change == 3);
        CHECK(t.peak_index == 3);
    }
    SUBCASE("sunshine: strict rise to month 7, strict fall") {
        const auto t = detect_trend(values_only(gallery::kSunshinePct));
        CHECK(t.direction == TrendSummary::Direction::increase);
        CHECK(t.stability == TrendSummary::Stability::strict);
        CHECK(t.peak_index == 6);
        REQUIRE(t.post_peak.has_value());
        CHECK(*t.post_peak == TrendSummary::Stability::strict);
    }
    SUBCASE("bikes: fluctuating") {
        const auto t = detect_trend(values_only(gallery::kBikesPct));
        CHECK(t.stability == TrendSummary::Stability::fluctuating);
    }
    SUBCASE("Anscombe I sorted by x: general increase, fluctuating tail") {
        const auto t = detect_trend(series_of(gallery::kAnscombeX123, gallery::kAnscombeY1));
        CHECK(t.direction == TrendSummary::Direction::increase);
        CHECK(t.stability == TrendSummary::Stability::general);
        CHECK(t.peak_location == 12);
        CHECK_FALSE(t.post_peak.has_value());
    }
    SUBCASE("tied x values are not an ordered axis") {
        CHECK_THROWS_AS(detect_trend(series_of(gallery::kAnscombeX4, gallery::kAnscombeY4)),
                        InapplicableStatError);
    }
    SUBCASE("reversal maps direction and preserves direction changes") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 2 + rng() % 20;
            std::vector<double> v(n);
            for (auto& x : v) x = static_cast<double>(rng() % 19) - 9.0;
            const auto fwd = detect_trend(values_only(v));
            std::vector<double> rev(v.rbegin(), v.rend());
            const auto bwd = detect_trend(values_only(rev));
            CHECK(fwd.direction_changes == bwd.direction_changes);
            if (fwd.direction == TrendSummary::Direction::increase &&
                fwd.stability != TrendSummary::Stability::fluctuating && !fwd.post_peak) {
                CHECK(bwd.direction == TrendSummary::Direction::decrease);
            }
            if (fwd.direction == TrendSummary::Direction::flat) {
                CHECK(bwd.direction == TrendSummary::Direction::flat);
            }
        }
    }
}

TEST_CASE("statistic ordering invariants") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        std::vector<double> v(n);
        for (auto& x : v) x = static_cast<double>(rng() % 2000) / 7.0 - 100.0;
        const auto s = values_only(v);
        const double lo = compute_statistic(s, StatKind::min).values[0];
        const double hi = compute_statistic(s, StatKind::max).values[0];
        const double mean = compute_statistic(s, StatKind::mean).values[0];
        const double median = compute_statistic(s, StatKind::median).values[0];
        CHECK(lo <= mean);
        CHECK(mean <= hi);
        CHECK(lo <= median);
        CHECK(median <= hi);
    }
}

TEST_CASE("default statistics per chart type") {
    CHECK(default_statistics(ChartType::line) ==
          std::vector<StatKind>{StatKind::min, StatKind::max, StatKind::mean});
    CHECK(default_statistics(ChartType::boxplot) ==
          std::vector<StatKind>{StatKind::median, StatKind::iqr, StatKind::outliers});
    CHECK(default_statistics(ChartType::blank).empty());
    CHECK(default_statistics(ChartType::scatter) ==
          std::vector<StatKind>{StatKind::num_pts, StatKind::mean, StatKind::linear_fit,
                                StatKind::outliers});
    CHECK(default_statistics(ChartType::strip) ==
          std::vector<StatKind>{StatKind::num_pts, StatKind::median, StatKind::outliers});
}

TEST_CASE("inapplicable statistics throw") {
    CHECK_THROWS_AS(compute_statistic(values_only({}), StatKind::mean), InapplicableStatError);
    CHECK_THROWS_AS(compute_statistic(values_only({1, 2, 3}), StatKind::correlation),
                    InapplicableStatError);
    CHECK_THROWS_AS(compute_statistic(values_only({1, 2}), StatKind::max_contour_center),
                    InapplicableStatError);
}
