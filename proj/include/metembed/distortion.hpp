#pragma once

#include "metembed/graph.hpp"
#include "metembed/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace metembed {

struct DistortionReport {
    Rational min_ratio;
    Rational max_ratio;
    std::pair<VertexId, VertexId> witness_min{-1, -1};
    std::pair<VertexId, VertexId> witness_max{-1, -1};
    std::int64_t pairs = 0;

    Rational distortion() const { return max_ratio / min_ratio; }
};

/// Nonnegative ratio num/den with den > 0, compared by cross multiplication.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator<(const Ratio& x, const Ratio& y) {
        return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
    }
    friend bool operator==(const Ratio& x, const Ratio& y) {
        return static_cast<__int128>(x.num) * y.den == static_cast<__int128>(y.num) * x.den;
    }
};

namespace detail {

struct RatioExtremes {
    Ratio lo{1, 0};  // sentinel: not yet set
    Ratio hi{0, 1};
    std::pair<VertexId, VertexId> lo_at{-1, -1};
    std::pair<VertexId, VertexId> hi_at{-1, -1};
    std::int64_t pairs = 0;

    // Pairs arrive in lexicographic order within a chunk, so keeping the first
    // attainer gives the least witness; merge() compares witnesses explicitly.
    void add(const Ratio& r, std::pair<VertexId, VertexId> at) {
        ++pairs;
        if (lo_at.first < 0 || r < lo) {
            lo = r;
            lo_at = at;
        }
        if (hi_at.first < 0 || hi < r) {
            hi = r;
            hi_at = at;
        }
    }

    void merge(const RatioExtremes& o) {
        pairs += o.pairs;
        if (o.lo_at.first >= 0 &&
            (lo_at.first < 0 || o.lo < lo || (o.lo == lo && o.lo_at < lo_at))) {
            lo = o.lo;
            lo_at = o.lo_at;
        }
        if (o.hi_at.first >= 0 &&
            (hi_at.first < 0 || hi < o.hi || (o.hi == hi && o.hi_at < hi_at))) {
            hi = o.hi;
            hi_at = o.hi_at;
        }
    }
};

}  // namespace detail

/// Min and max of ratio(a, b) over all pairs a < b, with lexicographically
/// least witnesses. Rows are dealt round-robin to `threads` workers; the
/// reduction does not depend on the thread count.
template <typename RatioFn>
DistortionReport scan_pairs(std::size_t n, RatioFn&& ratio, int threads = 1) {
    threads = std::max(1, threads);
    std::vector<detail::RatioExtremes> parts(static_cast<std::size_t>(threads));
    auto work = [&](int t) {
        auto& acc = parts[static_cast<std::size_t>(t)];
        for (std::size_t a = static_cast<std::size_t>(t); a < n; a += threads)
            for (std::size_t b = a + 1; b < n; ++b)
                acc.add(ratio(static_cast<VertexId>(a), static_cast<VertexId>(b)),
                        {static_cast<VertexId>(a), static_cast<VertexId>(b)});
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    detail::RatioExtremes total;
    for (const auto& p : parts) total.merge(p);

    DistortionReport report;
    report.pairs = total.pairs;
    if (total.pairs == 0) {
        report.min_ratio = report.max_ratio = 1;
        return report;
    }
    report.min_ratio = make_rational(total.lo.num, total.lo.den);
    report.max_ratio = make_rational(total.hi.num, total.hi.den);
    report.witness_min = total.lo_at;
    report.witness_max = total.hi_at;
    return report;
}

/// Throws CounterexampleError when the report leaves [lower, upper].
void require_bounds(const DistortionReport& report, const Rational& lower, const Rational& upper,
                    const char* what);

}  // namespace metembed
