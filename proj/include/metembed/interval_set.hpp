#pragma once

#include "metembed/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace metembed {

/// Finite union of half-open cells [p/den, q/den) inside [0, 1), kept sorted
/// and maximally merged so that equal sets compare equal.
class IntervalSet {
public:
    using Cell = std::pair<std::uint64_t, std::uint64_t>;

    explicit IntervalSet(std::uint64_t den = 1);
    IntervalSet(std::uint64_t den, std::vector<Cell> cells);

    static IntervalSet full(std::uint64_t den = 1) { return IntervalSet(den, {{0, den}}); }

    std::uint64_t denominator() const { return den_; }
    const std::vector<Cell>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }

    /// Sum of cell lengths in units of 1/den.
    std::uint64_t count() const;
    Rational measure() const;

    /// Same set over a finer grid; `den` must be a multiple of the current one.
    IntervalSet rescaled(std::uint64_t den) const;

    bool subset_of(const IntervalSet& other) const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    void normalize();

    std::uint64_t den_;
    std::vector<Cell> cells_;
};

IntervalSet unite(const IntervalSet& u, const IntervalSet& v);
Rational intersection_measure(const IntervalSet& u, const IntervalSet& v);

/// Measure of the symmetric difference, by one merge pass over a common grid.
Rational symm_diff_measure(const IntervalSet& u, const IntervalSet& v);

/// Union over u = 0..g-1 of (u + s) / g, over denominator g^2. The result is
/// independent of every set whose denominator divides g.
IntervalSet tile(const IntervalSet& s);

/// The image of s under x -> (quarter + x) / 4, over denominator `den`.
IntervalSet place_in_quarter(const IntervalSet& s, int quarter, std::uint64_t den);

}  // namespace metembed
