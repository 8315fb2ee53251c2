#include "metembed/cutcone.hpp"

#include "metembed/errors.hpp"

#include <string>

namespace metembed {

namespace {

void check_size(const DistanceMatrix& d, int root, int max_points) {
    if (d.rows() != d.cols()) throw ValidationError("distance matrix is not square");
    if (d.rows() > max_points)
        throw CapacityError("cut-cone LP supports at most " + std::to_string(max_points) +
                            " points, got " + std::to_string(d.rows()));
    if (d.rows() > 0 && (root < 0 || root >= d.rows()))
        throw ValidationError("root " + std::to_string(root) + " is not a vertex");
}

Rational cut_sum(const CutMeasure& m, int i, int j) {
    Rational s = 0;
    for (const auto& [cut, lambda] : m.cuts)
        if (cut.separates(i, j)) s += lambda;
    return s;
}

}  // namespace

std::vector<VertexId> CutMetric::subset() const {
    std::vector<VertexId> out;
    for (int v = 0; v < 32; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

CutMetric canonical_cut(std::uint32_t mask, int points, int root) {
    const std::uint32_t all = points >= 32 ? ~0u : (1u << points) - 1;
    mask &= all;
    if ((mask >> root) & 1u) mask = all & ~mask;
    return CutMetric{mask};
}

std::vector<CutMetric> all_cuts(int points, int root) {
    std::vector<CutMetric> cuts;
    if (points < 2) return cuts;
    const std::uint32_t limit = 1u << points;
    for (std::uint32_t mask = 1; mask < limit; ++mask)
        if (!((mask >> root) & 1u)) cuts.push_back(CutMetric{mask});
    return cuts;
}

LinearProgram<Rational> distortion_program(const DistanceMatrix& d, int root) {
    const int n = static_cast<int>(d.rows());
    const auto cuts = all_cuts(n, root);
    const auto k = static_cast<Eigen::Index>(cuts.size());
    const Eigen::Index pairs = static_cast<Eigen::Index>(n) * (n - 1) / 2;

    LinearProgram<Rational> lp;
    lp.A = LinearProgram<Rational>::Matrix::Zero(2 * pairs, k + 1);
    lp.b = LinearProgram<Rational>::Vector::Zero(2 * pairs);
    lp.c = LinearProgram<Rational>::Vector::Zero(k + 1);
    lp.c(k) = 1;
    Eigen::Index p = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++p) {
            for (Eigen::Index s = 0; s < k; ++s) {
                if (!cuts[s].separates(i, j)) continue;
                lp.A(p, s) = 1;
                lp.A(pairs + p, s) = -1;
            }
            lp.b(p) = d(i, j);
            lp.A(pairs + p, k) = d(i, j);
        }
    }
    return lp;
}

MinDistortion solve_min_distortion(const DistanceMatrix& d, const CutConeOptions& options) {
    check_size(d, options.root, options.max_points);
    const int n = static_cast<int>(d.rows());
    MinDistortion out;
    out.c = 1;
    out.measure.points = n;
    out.measure.root = options.root;
    out.measure.scale = 1;
    if (n < 2) return out;

    const auto lp = distortion_program(d, options.root);
    const auto sol = simplex_solve(lp);
    if (!certifies_optimum(lp, sol))
        throw StructuralError("simplex optimality certificate failed to verify");
    const Rational mu = sol.objective;
    if (mu <= 0) throw StructuralError("distortion program returned a nonpositive optimum");

    const auto cuts = all_cuts(n, options.root);
    out.c = 1 / mu;
    out.pivots = sol.pivots;
    out.measure.scale = out.c;
    for (std::size_t s = 0; s < cuts.size(); ++s) {
        const Rational& lambda = sol.x(static_cast<Eigen::Index>(s));
        if (lambda != 0) out.measure.cuts.emplace_back(cuts[s], lambda / mu);
    }
    verify_cut_measure(out.measure, d);
    return out;
}

void verify_cut_measure(const CutMeasure& m, const DistanceMatrix& d) {
    if (d.rows() != m.points)
        throw ValidationError("cut measure has " + std::to_string(m.points) +
                              " points, metric has " + std::to_string(d.rows()));
    for (const auto& [cut, lambda] : m.cuts)
        if (lambda < 0) throw ValidationError("negative cut weight");
    for (int i = 0; i < m.points; ++i) {
        for (int j = i + 1; j < m.points; ++j) {
            const Rational s = cut_sum(m, i, j);
            if (s < d(i, j) || s > m.scale * d(i, j))
                throw ValidationError("cut measure violates pair (" + std::to_string(i) + ", " +
                                      std::to_string(j) + "): " + to_string(s) +
                                      " not in [" + std::to_string(d(i, j)) + ", " +
                                      to_string(m.scale * d(i, j)) + "]");
        }
    }
}

Coordinates extract_embedding(const CutMeasure& m) {
    Coordinates x = Coordinates::Zero(m.points, static_cast<Eigen::Index>(m.cuts.size()));
    for (std::size_t s = 0; s < m.cuts.size(); ++s) {
        const auto& [cut, lambda] = m.cuts[s];
        for (int v = 0; v < m.points; ++v)
            if (cut.contains(v)) x(v, static_cast<Eigen::Index>(s)) = lambda;
    }
    return x;
}

Coordinates extract_embedding(const CutMeasure& m, const DistanceMatrix& d) {
    verify_cut_measure(m, d);
    return extract_embedding(m);
}

DistortionReport embedding_distortion(const Coordinates& x, const DistanceMatrix& d) {
    DistortionReport r;
    r.min_ratio = r.max_ratio = 1;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < x.rows(); ++j) {
            const Rational ratio = (x.row(i) - x.row(j)).cwiseAbs().sum() / Rational(d(i, j));
            const std::pair<VertexId, VertexId> at{static_cast<VertexId>(i),
                                                   static_cast<VertexId>(j)};
            if (r.pairs == 0 || ratio < r.min_ratio) {
                r.min_ratio = ratio;
                r.witness_min = at;
            }
            if (r.pairs == 0 || ratio > r.max_ratio) {
                r.max_ratio = ratio;
                r.witness_max = at;
            }
            ++r.pairs;
        }
    }
    return r;
}

}  // namespace metembed
