#include "chartalt/stats_kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chartalt::kernels {

namespace serial {

double sum(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
}

double mean(std::span<const double> v) {
    if (v.empty()) return 0.0;
    return sum(v) / static_cast<double>(v.size());
}

double variance(std::span<const double> v) {
    if (v.empty()) return 0.0;
    const double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size());
}

MinMax min_max(std::span<const double> v) {
    MinMax r;
    if (v.empty()) return r;
    r.min = r.max = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < r.min) { r.min = v[i]; r.argmin = i; }
        if (v[i] > r.max) { r.max = v[i]; r.argmax = i; }
    }
    return r;
}

double dot_deviations(std::span<const double> a, double mean_a,
                      std::span<const double> b, double mean_b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - mean_a) * (b[i] - mean_b);
    return acc;
}

std::vector<std::size_t> indices_outside(std::span<const double> v, double lo, double hi) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < lo || v[i] > hi) idx.push_back(i);
    }
    return idx;
}

std::vector<double> first_differences(std::span<const double> v) {
    if (v.size() < 2) return {};
    std::vector<double> d(v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) d[i] = v[i + 1] - v[i];
    return d;
}

std::size_t inc_to_dec_transitions(std::span<const double> diffs) {
    std::size_t count = 0;
    int prev = 0;
    for (double d : diffs) {
        const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev > 0 && s < 0) ++count;
        prev = s;
    }
    return count;
}

}  // namespace serial

namespace {

#ifdef _OPENMP
// Splits [0,n) into per-thread chunks, reduces each locally, and combines the
// partials in thread order. Deterministic for a fixed thread count.
template <typename Partial, typename Body, typename Combine>
Partial chunked_reduce(std::size_t n, Partial init, Body body, Combine combine) {
    const int max_threads = omp_get_max_threads();
    std::vector<Partial> partials(static_cast<std::size_t>(max_threads), init);
#pragma omp parallel num_threads(max_threads)
    {
        const int t = omp_get_thread_num();
        const int nt = omp_get_num_threads();
        const std::size_t chunk = (n + static_cast<std::size_t>(nt) - 1) / static_cast<std::size_t>(nt);
        const std::size_t lo = std::min(n, chunk * static_cast<std::size_t>(t));
        const std::size_t hi = std::min(n, lo + chunk);
        Partial local = init;
        for (std::size_t i = lo; i < hi; ++i) body(local, i);
        partials[static_cast<std::size_t>(t)] = local;
    }
    Partial out = init;
    for (const Partial& p : partials) combine(out, p);
    return out;
}
#endif

}  // namespace

double sum(std::span<const double> v) {
#ifdef _OPENMP
    if (v.size() >= PARALLEL_CUTOFF) {
        return chunked_reduce<double>(
            v.size(), 0.0, [&](double& acc, std::size_t i) { acc += v[i]; },
            [](double& acc, const double& p) { acc += p; });
    }
#endif
    return serial::sum(v);
}

double mean(std::span<const double> v) {
    if (v.empty()) return 0.0;
    return sum(v) / static_cast<double>(v.size());
}

double variance(std::span<const double> v) {
    if (v.empty()) return 0.0;
    const double m = mean(v);
#ifdef _OPENMP
    if (v.size() >= PARALLEL_CUTOFF) {
        const double acc = chunked_reduce<double>(
            v.size(), 0.0, [&](double& a, std::size_t i) { a += (v[i] - m) * (v[i] - m); },
            [](double& a, const double& p) { a += p; });
        return acc / static_cast<double>(v.size());
    }
#endif
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size());
}

MinMax min_max(std::span<const double> v) {
#ifdef _OPENMP
    if (v.size() >= PARALLEL_CUTOFF) {
        struct P {
            bool any = false;
            MinMax mm;
        };
        const P r = chunked_reduce<P>(
            v.size(), P{},
            [&](P& p, std::size_t i) {
                if (!p.any) {
                    p.any = true;
                    p.mm.min = p.mm.max = v[i];
                    p.mm.argmin = p.mm.argmax = i;
                    return;
                }
                if (v[i] < p.mm.min) { p.mm.min = v[i]; p.mm.argmin = i; }
                if (v[i] > p.mm.max) { p.mm.max = v[i]; p.mm.argmax = i; }
            },
            [](P& out, const P& p) {
                if (!p.any) return;
                if (!out.any) { out = p; return; }
                if (p.mm.min < out.mm.min) { out.mm.min = p.mm.min; out.mm.argmin = p.mm.argmin; }
                if (p.mm.max > out.mm.max) { out.mm.max = p.mm.max; out.mm.argmax = p.mm.argmax; }
            });
        return r.mm;
    }
#endif
    return serial::min_max(v);
}

double dot_deviations(std::span<const double> a, double mean_a,
                      std::span<const double> b, double mean_b) {
#ifdef _OPENMP
    if (a.size() >= PARALLEL_CUTOFF) {
        return chunked_reduce<double>(
            a.size(), 0.0,
            [&](double& acc, std::size_t i) { acc += (a[i] - mean_a) * (b[i] - mean_b); },
            [](double& acc, const double& p) { acc += p; });
    }
#endif
    return serial::dot_deviations(a, mean_a, b, mean_b);
}

std::vector<std::size_t> indices_outside(std::span<const double> v, double lo, double hi) {
#ifdef _OPENMP
    if (v.size() >= PARALLEL_CUTOFF) {
        using P = std::vector<std::size_t>;
        return chunked_reduce<P>(
            v.size(), P{},
            [&](P& p, std::size_t i) {
                if (v[i] < lo || v[i] > hi) p.push_back(i);
            },
            [](P& out, const P& p) { out.insert(out.end(), p.begin(), p.end()); });
    }
#endif
    return serial::indices_outside(v, lo, hi);
}

std::vector<double> first_differences(std::span<const double> v) {
    if (v.size() < 2) return {};
    std::vector<double> d(v.size() - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (v.size() >= PARALLEL_CUTOFF)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(v.size()) - 1; ++i) {
        d[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i)];
    }
    return d;
}

std::size_t inc_to_dec_transitions(std::span<const double> diffs) {
    // Transitions depend on the previous nonzero sign, so the chunks carry
    // boundary signs and are stitched in order.
#ifdef _OPENMP
    if (diffs.size() >= PARALLEL_CUTOFF) {
        struct P {
            std::size_t count = 0;
            int first_sign = 0;  // first nonzero sign in chunk
            int last_sign = 0;   // last nonzero sign in chunk
            bool any = false;
        };
        const P r = chunked_reduce<P>(
            diffs.size(), P{},
            [&](P& p, std::size_t i) {
                const double d = diffs[i];
                const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
                if (s == 0) return;
                if (!p.any) {
                    p.any = true;
                    p.first_sign = s;
                } else if (p.last_sign > 0 && s < 0) {
                    ++p.count;
                }
                p.last_sign = s;
            },
            [](P& out, const P& p) {
                if (!p.any) return;
                if (!out.any) { out = p; return; }
                out.count += p.count;
                if (out.last_sign > 0 && p.first_sign < 0) ++out.count;
                out.last_sign = p.last_sign;
            });
        return r.count;
    }
#endif
    return serial::inc_to_dec_transitions(diffs);
}

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) return 0.0;
    if (sorted.size() == 1) return sorted[0];
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double quantile(std::span<const double> v, double q) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    return quantile_sorted(sorted, q);
}

}  // namespace chartalt::kernels
