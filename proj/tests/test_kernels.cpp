#include <doctest.h>

#include <cmath>
#include <random>

#include "chartalt/stats_kernels.hpp"

using namespace chartalt;

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = (static_cast<double>(rng()) / rng.max()) * 200.0 - 100.0;
    return v;
}

// Exact-rational quantile for quartiles over small integer grids: the
// independent oracle for the interpolated-quantile rule.
double quartile_oracle(std::vector<double> sorted_values, int quarter) {
    std::sort(sorted_values.begin(), sorted_values.end());
    const std::size_t n = sorted_values.size();
    const std::size_t idx = (quarter * (n - 1)) / 4;
    const std::size_t rem = (quarter * (n - 1)) % 4;
    double v = sorted_values[idx];
    if (rem != 0) {
        v += (static_cast<double>(rem) / 4.0) * (sorted_values[idx + 1] - sorted_values[idx]);
    }
    return v;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
    // Sizes straddle the parallel cutoff.
    for (std::size_t n : {3UL, 100UL, kernels::PARALLEL_CUTOFF + 17UL, 100000UL}) {
        const auto v = random_values(n, static_cast<unsigned>(n));
        const auto w = random_values(n, static_cast<unsigned>(n + 1));

        CHECK(kernels::sum(v) == doctest::Approx(kernels::serial::sum(v)).epsilon(1e-12));
        CHECK(kernels::mean(v) == doctest::Approx(kernels::serial::mean(v)).epsilon(1e-12));
        CHECK(kernels::variance(v) == doctest::Approx(kernels::serial::variance(v)).epsilon(1e-12));

        const auto mm_p = kernels::min_max(v);
        const auto mm_s = kernels::serial::min_max(v);
        CHECK(mm_p.min == mm_s.min);
        CHECK(mm_p.max == mm_s.max);
        CHECK(mm_p.argmin == mm_s.argmin);
        CHECK(mm_p.argmax == mm_s.argmax);

        const double mv = kernels::serial::mean(v), mw = kernels::serial::mean(w);
        CHECK(kernels::dot_deviations(v, mv, w, mw) ==
              doctest::Approx(kernels::serial::dot_deviations(v, mv, w, mw)).epsilon(1e-10));

        CHECK(kernels::indices_outside(v, -50.0, 50.0) ==
              kernels::serial::indices_outside(v, -50.0, 50.0));

        const auto d_p = kernels::first_differences(v);
        const auto d_s = kernels::serial::first_differences(v);
        CHECK(d_p == d_s);
        CHECK(kernels::inc_to_dec_transitions(d_p) == kernels::serial::inc_to_dec_transitions(d_s));
    }
}

TEST_CASE("parallel reductions are deterministic run to run") {
    const auto v = random_values(kernels::PARALLEL_CUTOFF * 4, 7);
    const double first = kernels::sum(v);
    for (int i = 0; i < 5; ++i) CHECK(kernels::sum(v) == first);
}

TEST_CASE("min_max reports first occurrences") {
    const std::vector<double> v = {3, 1, 4, 1, 5, 5, 2};
    const auto mm = kernels::min_max(v);
    CHECK(mm.argmin == 1);
    CHECK(mm.argmax == 4);
}

TEST_CASE("interpolated quantiles match the exact-rational oracle on all small multisets") {
    // Every nondecreasing series of length <= 8 over values {0..9}: quantile
    // results are permutation invariant, so multisets cover all series.
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<int> idx(n, 0);
        while (true) {
            std::vector<double> v(idx.begin(), idx.end());
            for (int quarter : {1, 2, 3}) {
                const double expected = quartile_oracle(v, quarter);
                const double actual = kernels::quantile(v, quarter / 4.0);
                REQUIRE(actual == doctest::Approx(expected).epsilon(1e-12));
            }
            ++cases;
            // Next nondecreasing tuple.
            std::size_t k = n;
            while (k > 0 && idx[k - 1] == 9) --k;
            if (k == 0) break;
            const int next = idx[k - 1] + 1;
            for (std::size_t j = k - 1; j < n; ++j) idx[j] = next;
        }
    }
    CHECK(cases > 30000);
}

TEST_CASE("inc_to_dec_transitions skips zero differences") {
    CHECK(kernels::inc_to_dec_transitions(std::vector<double>{1, 0, -1}) == 1);
    CHECK(kernels::inc_to_dec_transitions(std::vector<double>{1, 1, 1}) == 0);
    CHECK(kernels::inc_to_dec_transitions(std::vector<double>{-1, 1, -1, 1, -1}) == 2);
    CHECK(kernels::inc_to_dec_transitions(std::vector<double>{}) == 0);
}
