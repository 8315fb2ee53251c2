#include "metembed/l1_embedding.hpp"

#include "metembed/errors.hpp"

#include <string>

namespace metembed {

namespace {

// The prefix [0, k/4) over denominator den.
IntervalSet quarters(int k, std::uint64_t den) {
    if (k == 0) return IntervalSet(den);
    return IntervalSet(4, {{0, static_cast<std::uint64_t>(k)}}).rescaled(den);
}

}  // namespace

std::uint64_t l1_resolution(int level) {
    std::uint64_t g = 1;
    for (int i = 0; i < level; ++i) {
        if (g > (UINT64_MAX / 4) / g) throw CapacityError("L1 resolution overflows at level " +
                                                          std::to_string(level));
        g = 4 * g * g;
    }
    return g;
}

IntervalSet interval_set_of(const VertexAddress& addr, int level) {
    if (static_cast<int>(addr.path.size()) > level)
        throw ValidationError("address deeper than level " + std::to_string(level));
    const std::uint64_t den = l1_resolution(level);
    if (addr.path.empty()) {
        if (level == 0 && addr.terminal != Anchor::A && addr.terminal != Anchor::U)
            throw ValidationError("level-0 copy has only anchors A and U");
        switch (addr.terminal) {
            case Anchor::A: return IntervalSet(den);
            case Anchor::T: return quarters(1, den);
            case Anchor::L: return quarters(2, den);
            case Anchor::R: return unite(quarters(1, den), IntervalSet(4, {{2, 3}}).rescaled(den));
            case Anchor::B: return quarters(3, den);
            case Anchor::U: return IntervalSet::full(den);
            default: throw ValidationError("not a Laakso anchor: " + format_address(addr));
        }
    }

    VertexAddress rest{{addr.path.begin() + 1, addr.path.end()}, addr.terminal};
    const IntervalSet theta = interval_set_of(rest, level - 1);
    switch (addr.path.front()) {
        case Branch::Y: return place_in_quarter(theta, 0, den);
        case Branch::C: return unite(quarters(1, den), place_in_quarter(theta, 1, den));
        case Branch::D: return unite(quarters(1, den), place_in_quarter(tile(theta), 2, den));
        case Branch::E: return unite(quarters(2, den), place_in_quarter(theta, 2, den));
        case Branch::F:
            return unite(unite(quarters(1, den), place_in_quarter(tile(theta), 1, den)),
                         IntervalSet(4, {{2, 3}}).rescaled(den));
        case Branch::Z: return unite(quarters(3, den), place_in_quarter(theta, 3, den));
        default: throw ValidationError("not a Laakso branch: " + format_address(addr));
    }
}

IntervalEmbedding l1_embed(const LevelGraph& g, const L1Options& options) {
    if (g.family() != Family::laakso)
        throw ValidationError("L1 embedding is defined for Laakso graphs only");
    if (g.level() > options.max_level)
        throw CapacityError("L1 embedding level " + std::to_string(g.level()) +
                            " exceeds the maximum level " + std::to_string(options.max_level) +
                            " (pass --allow-large for level 4)");
    IntervalEmbedding emb;
    emb.level = g.level();
    emb.resolution = l1_resolution(g.level());
    emb.sets.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        emb.sets.push_back(interval_set_of(g.canonical_address(static_cast<VertexId>(v)), g.level()));
    return emb;
}

DistortionReport verify_l1_distortion(const DistanceMatrix& d, const IntervalEmbedding& emb,
                                      int threads) {
    if (static_cast<std::size_t>(d.rows()) != emb.sets.size())
        throw ValidationError("embedding and metric sizes differ");
    const std::int64_t scale = std::int64_t{1} << (2 * emb.level);
    const auto g = static_cast<std::int64_t>(emb.resolution);
    auto report = scan_pairs(
        emb.sets.size(),
        [&](VertexId a, VertexId b) {
            // Both sets share the grid, so the measure is an integer count over g.
            Rational m = symm_diff_measure(emb.sets[a], emb.sets[b]);
            auto count = (m * g).convert_to<std::int64_t>();
            return Ratio{count * scale, g * d(a, b)};
        },
        threads);
    require_bounds(report, make_rational(3, 4), make_rational(1), "L1 embedding");
    return report;
}

IndependenceCheck verify_independence(const LevelGraph& lower) {
    if (lower.family() != Family::laakso)
        throw ValidationError("independence is checked on Laakso graphs");
    std::vector<IntervalSet> theta, phi;
    for (std::size_t v = 0; v < lower.vertex_count(); ++v) {
        theta.push_back(interval_set_of(lower.canonical_address(static_cast<VertexId>(v)),
                                        lower.level()));
        phi.push_back(tile(theta.back()));
    }
    IndependenceCheck check;
    for (const auto& a : theta) {
        const Rational ma = a.measure();
        for (const auto& b : phi) {
            ++check.pairs;
            if (intersection_measure(a, b) != ma * b.measure()) ++check.violations;
        }
    }
    return check;
}

Lemma3Sides lemma3_check(const Rational& s, const Rational& t) {
    if (s < 0 || s > 1 || t < 0 || t > 1)
        throw ValidationError("lemma3_check needs 0 <= s, t <= 1, got s = " + to_string(s) +
                              ", t = " + to_string(t));
    Lemma3Sides out;
    out.lhs = 1 + std::min(s + t, 2 - s - t);
    out.rhs = make_rational(4, 3) * (1 + s + t - 2 * s * t);
    out.holds = out.lhs <= out.rhs;
    return out;
}

}  // namespace metembed
