#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Data-parallel reductions used by the statistics layer. Every kernel has a
// serial twin in kernels::serial with identical semantics; the parallel
// versions fall back to the serial path below PARALLEL_CUTOFF elements so
// small series (the typical notebook case) see no threading overhead and
// bit-identical results run to run. Parallel reductions accumulate
// per-thread partials and combine them in thread order, so results are
// deterministic for a fixed thread count.
namespace chartalt::kernels {

inline constexpr std::size_t PARALLEL_CUTOFF = 4096;

struct MinMax {
    double min = 0.0;
    double max = 0.0;
    std::size_t argmin = 0;  // first occurrence
    std::size_t argmax = 0;
};

namespace serial {

double sum(std::span<const double> v);
double mean(std::span<const double> v);
// Population variance (divide by n).
double variance(std::span<const double> v);
MinMax min_max(std::span<const double> v);
// Sum of (a[i]-mean_a)*(b[i]-mean_b); the shared accumulator for OLS and Pearson.
double dot_deviations(std::span<const double> a, double mean_a,
                      std::span<const double> b, double mean_b);
// Indices of elements outside [lo, hi].
std::vector<std::size_t> indices_outside(std::span<const double> v, double lo, double hi);
// First differences v[i+1]-v[i].
std::vector<double> first_differences(std::span<const double> v);
// Number of +->- transitions between consecutive nonzero-sign differences.
std::size_t inc_to_dec_transitions(std::span<const double> diffs);

}  // namespace serial

double sum(std::span<const double> v);
double mean(std::span<const double> v);
double variance(std::span<const double> v);
MinMax min_max(std::span<const double> v);
double dot_deviations(std::span<const double> a, double mean_a,
                      std::span<const double> b, double mean_b);
std::vector<std::size_t> indices_outside(std::span<const double> v, double lo, double hi);
std::vector<double> first_differences(std::span<const double> v);
std::size_t inc_to_dec_transitions(std::span<const double> diffs);

// Quantile with linear interpolation between order statistics (q in [0,1]).
// Sorts a copy; shared by both paths.
double quantile_sorted(std::span<const double> sorted, double q);
double quantile(std::span<const double> v, double q);

}  // namespace chartalt::kernels
