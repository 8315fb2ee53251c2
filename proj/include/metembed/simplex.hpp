#pragma once

#include "metembed/errors.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace metembed {

/// maximize c'x subject to A x <= b, x >= 0. Entries of b may be negative.
template <typename Scalar>
struct LinearProgram {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    Matrix A;
    Vector b;
    Vector c;
};

template <typename Scalar>
struct LpSolution {
    using Vector = typename LinearProgram<Scalar>::Vector;

    Scalar objective;
    Vector x;
    Vector dual;  // y >= 0 with A'y >= c and b'y = objective
    std::vector<Eigen::Index> basis;
    std::size_t pivots = 0;
    std::size_t degenerate_pivots = 0;
};

namespace detail {

// Dense tableau: constraint rows, then one objective row per phase, then the
// right-hand side as the last column. Objective rows hold reduced costs and
// minus the current objective value.
template <typename Scalar>
class Tableau {
public:
    using Rows = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    explicit Tableau(const LinearProgram<Scalar>& lp)
        : m_(lp.A.rows()), n_(lp.A.cols()) {
        Eigen::Index min_row = 0;
        for (Eigen::Index i = 1; i < m_; ++i)
            if (lp.b(i) < lp.b(min_row)) min_row = i;
        phase1_ = m_ > 0 && lp.b(min_row) < 0;

        aux_ = n_ + m_;
        cols_ = n_ + m_ + (phase1_ ? 1 : 0) + 1;
        rhs_ = cols_ - 1;
        t_ = Rows::Zero(m_ + (phase1_ ? 2 : 1), cols_);
        t_.topLeftCorner(m_, n_) = lp.A;
        for (Eigen::Index i = 0; i < m_; ++i) {
            t_(i, n_ + i) = 1;
            t_(i, rhs_) = lp.b(i);
            if (phase1_) t_(i, aux_) = -1;
        }
        main_row_ = m_;
        t_.row(main_row_).head(n_) = lp.c.transpose();
        basis_.resize(static_cast<std::size_t>(m_));
        for (Eigen::Index i = 0; i < m_; ++i) basis_[i] = n_ + i;

        if (phase1_) {
            const Eigen::Index phase_row = m_ + 1;
            t_(phase_row, aux_) = -1;
            pivot(min_row, aux_);
            optimize(phase_row, -1);
            if (t_(phase_row, rhs_) != 0)
                throw StructuralError("linear program is infeasible");
            for (Eigen::Index i = 0; i < m_; ++i) {
                if (basis_[i] != aux_) continue;
                for (Eigen::Index j = 0; j < aux_; ++j) {
                    if (t_(i, j) != 0) {
                        pivot(i, j);
                        break;
                    }
                }
            }
        }
        optimize(main_row_, phase1_ ? aux_ : -1);
    }

    LpSolution<Scalar> solution() const {
        LpSolution<Scalar> s;
        s.objective = -t_(main_row_, rhs_);
        s.x = LinearProgram<Scalar>::Vector::Zero(n_);
        for (Eigen::Index i = 0; i < m_; ++i)
            if (basis_[i] < n_) s.x(basis_[i]) = t_(i, rhs_);
        s.dual.resize(m_);
        for (Eigen::Index i = 0; i < m_; ++i) s.dual(i) = -t_(main_row_, n_ + i);
        s.basis = basis_;
        s.pivots = pivots_;
        s.degenerate_pivots = degenerate_;
        return s;
    }

private:
    // Dantzig's largest reduced cost, switching to Bland's least index while
    // the previous pivot was degenerate.
    void optimize(Eigen::Index obj, Eigen::Index forbidden) {
        bool bland = false;
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < rhs_; ++j) {
                if (j == forbidden || !(t_(obj, j) > 0)) continue;
                if (enter < 0 || (!bland && t_(obj, j) > t_(obj, enter))) enter = j;
                if (bland) break;
            }
            if (enter < 0) return;

            Eigen::Index leave = -1;
            for (Eigen::Index i = 0; i < m_; ++i) {
                if (!(t_(i, enter) > 0)) continue;
                if (leave < 0) {
                    leave = i;
                    continue;
                }
                // t(i,rhs)/t(i,enter) vs t(leave,rhs)/t(leave,enter), both pivots positive
                const Scalar lhs = t_(i, rhs_) * t_(leave, enter);
                const Scalar rhs = t_(leave, rhs_) * t_(i, enter);
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave < 0) throw StructuralError("linear program is unbounded");

            bland = t_(leave, rhs_) == 0;
            if (bland) ++degenerate_;
            pivot(leave, enter);
        }
    }

    void pivot(Eigen::Index r, Eigen::Index s) {
        ++pivots_;
        const Scalar inv = Scalar(1) / t_(r, s);
        nonzero_.clear();
        for (Eigen::Index j = 0; j < cols_; ++j) {
            if (t_(r, j) != 0) {
                t_(r, j) *= inv;
                nonzero_.push_back(j);
            }
        }
        for (Eigen::Index i = 0; i < t_.rows(); ++i) {
            if (i == r || t_(i, s) == 0) continue;
            const Scalar f = t_(i, s);
            for (Eigen::Index j : nonzero_) t_(i, j) -= f * t_(r, j);
        }
        basis_[r] = s;
    }

    Eigen::Index m_, n_, aux_ = -1, cols_ = 0, rhs_ = 0, main_row_ = 0;
    bool phase1_ = false;
    Rows t_;
    std::vector<Eigen::Index> basis_;
    std::vector<Eigen::Index> nonzero_;
    std::size_t pivots_ = 0;
    std::size_t degenerate_ = 0;
};

}  // namespace detail

/// Exact when Scalar is exact. Throws StructuralError if the program is
/// infeasible or unbounded.
template <typename Scalar>
LpSolution<Scalar> simplex_solve(const LinearProgram<Scalar>& lp) {
    if (lp.b.size() != lp.A.rows() || lp.c.size() != lp.A.cols())
        throw ValidationError("linear program dimensions disagree");
    detail::Tableau<Scalar> tableau(lp);
    return tableau.solution();
}

/// Primal feasibility, dual feasibility and equal objectives, checked directly
/// against the program data.
template <typename Scalar>
bool certifies_optimum(const LinearProgram<Scalar>& lp, const LpSolution<Scalar>& s) {
    using Vector = typename LinearProgram<Scalar>::Vector;
    if (s.x.size() != lp.A.cols() || s.dual.size() != lp.A.rows()) return false;
    for (Eigen::Index j = 0; j < s.x.size(); ++j)
        if (s.x(j) < 0) return false;
    for (Eigen::Index i = 0; i < s.dual.size(); ++i)
        if (s.dual(i) < 0) return false;
    const Vector ax = lp.A * s.x;
    for (Eigen::Index i = 0; i < ax.size(); ++i)
        if (ax(i) > lp.b(i)) return false;
    const Vector aty = lp.A.transpose() * s.dual;
    for (Eigen::Index j = 0; j < aty.size(); ++j)
        if (aty(j) < lp.c(j)) return false;
    const Scalar primal = lp.c.dot(s.x);
    const Scalar dual = lp.b.dot(s.dual);
    return primal == dual && primal == s.objective;
}

}  // namespace metembed
