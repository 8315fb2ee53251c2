#include "metembed/support_embedding.hpp"

#include "metembed/errors.hpp"

#include <bit>
#include <string>

namespace metembed {

namespace {

std::int64_t pow4(int n) { return std::int64_t{1} << (2 * n); }

// Copies `inner` (level n-1) into `out` (level n) shifted by `offset` indices.
void insert_shifted(SupportVector& out, const SupportVector& inner, std::int64_t offset) {
    for (std::int64_t i : inner.indices()) out.insert(i + offset);
}

}  // namespace

SupportVector::SupportVector(int level)
    : level_(level), dimension_(pow4(level)), words_((pow4(level) + 63) / 64, 0) {}

bool SupportVector::contains(std::int64_t index) const {
    if (index < 1 || index > dimension_) return false;
    auto bit = index - 1;
    return (words_[bit / 64] >> (bit % 64)) & 1u;
}

void SupportVector::insert(std::int64_t index) {
    if (index < 1 || index > dimension_)
        throw ValidationError("index " + std::to_string(index) + " outside 1.." +
                              std::to_string(dimension_));
    auto bit = index - 1;
    words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

void SupportVector::insert_range(std::int64_t first, std::int64_t last) {
    for (std::int64_t i = first; i <= last; ++i) insert(i);
}

std::int64_t SupportVector::size() const {
    std::int64_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

std::vector<std::int64_t> SupportVector::indices() const {
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<std::int64_t>(w) * 64 + b + 1);
            bits &= bits - 1;
        }
    }
    return out;
}

bool SupportVector::subset_of(const SupportVector& other) const {
    if (level_ != other.level_) return false;
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

std::int64_t hamming(const SupportVector& u, const SupportVector& v) {
    if (u.level_ != v.level_)
        throw ValidationError("support level mismatch: " + std::to_string(u.level_) + " vs " +
                              std::to_string(v.level_));
    std::int64_t total = 0;
    for (std::size_t w = 0; w < u.words_.size(); ++w) total += std::popcount(u.words_[w] ^ v.words_[w]);
    return total;
}

Eigen::VectorXi coefficients(const SupportVector& s) {
    Eigen::VectorXi x = Eigen::VectorXi::Zero(s.dimension());
    for (std::int64_t i : s.indices()) x(i - 1) = 1;
    return x;
}

std::int64_t j_convex_slack(std::int64_t m) {
    std::int64_t worst = m;
    Eigen::VectorXi v(m);
    for (std::int64_t j = 1; j <= m; ++j) {
        v.head(j).setOnes();
        v.tail(m - j).setConstant(-1);
        worst = std::min<std::int64_t>(worst, v.lpNorm<1>());
    }
    return m - worst;
}

SupportVector support_of(const VertexAddress& addr, int level) {
    if (static_cast<int>(addr.path.size()) > level)
        throw ValidationError("address deeper than level " + std::to_string(level));
    if (addr.path.empty()) {
        SupportVector s(level);
        const std::int64_t q = level == 0 ? 0 : pow4(level - 1);
        switch (addr.terminal) {
            case Anchor::A: break;
            case Anchor::U: s.insert_range(1, s.dimension()); break;
            case Anchor::T: s.insert_range(1, q); break;
            case Anchor::L: s.insert_range(1, 2 * q); break;
            case Anchor::R: s.insert_range(1, q); s.insert_range(2 * q + 1, 3 * q); break;
            case Anchor::B: s.insert_range(1, 3 * q); break;
            default: throw ValidationError("not a Laakso anchor: " + format_address(addr));
        }
        if (level == 0 && addr.terminal != Anchor::A && addr.terminal != Anchor::U)
            throw ValidationError("level-0 copy has only anchors A and U");
        return s;
    }

    VertexAddress rest{{addr.path.begin() + 1, addr.path.end()}, addr.terminal};
    const SupportVector inner = support_of(rest, level - 1);
    const std::int64_t q = pow4(level - 1);
    SupportVector s(level);
    // Blocks: 1..q, q+1..2q, 2q+1..3q, 3q+1..4q; copies of the lower map land
    // in block 1 (Y), 2 (C, F), 3 (D, E), 4 (Z).
    switch (addr.path.front()) {
        case Branch::Y: insert_shifted(s, inner, 0); break;
        case Branch::C: s.insert_range(1, q); insert_shifted(s, inner, q); break;
        case Branch::D: s.insert_range(1, q); insert_shifted(s, inner, 2 * q); break;
        case Branch::E: s.insert_range(1, 2 * q); insert_shifted(s, inner, 2 * q); break;
        case Branch::F:
            s.insert_range(1, q);
            s.insert_range(2 * q + 1, 3 * q);
            insert_shifted(s, inner, q);
            break;
        case Branch::Z: s.insert_range(1, 3 * q); insert_shifted(s, inner, 3 * q); break;
        default: throw ValidationError("not a Laakso branch: " + format_address(addr));
    }
    return s;
}

SupportEmbedding support_embed(const LevelGraph& g) {
    if (g.family() != Family::laakso)
        throw ValidationError("support embedding is defined for Laakso graphs only");
    SupportEmbedding emb;
    emb.level = g.level();
    emb.epsilon = make_rational(j_convex_slack(pow4(g.level())));
    emb.vectors.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        emb.vectors.push_back(support_of(g.canonical_address(static_cast<VertexId>(v)), g.level()));
    return emb;
}

DistortionReport verify_support_distortion(const DistanceMatrix& d, const SupportEmbedding& emb,
                                           int threads) {
    if (static_cast<std::size_t>(d.rows()) != emb.vectors.size())
        throw ValidationError("embedding and metric sizes differ");
    auto report = scan_pairs(
        emb.vectors.size(),
        [&](VertexId a, VertexId b) {
            return Ratio{hamming(emb.vectors[a], emb.vectors[b]), d(a, b)};
        },
        threads);
    if (emb.epsilon != 0) throw ValidationError("only the exact (epsilon = 0) realization is verified");
    require_bounds(report, make_rational(1, 2), make_rational(1), "support embedding");
    return report;
}

}  // namespace metembed
