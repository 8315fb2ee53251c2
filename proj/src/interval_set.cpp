#include "metembed/interval_set.hpp"

#include "metembed/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace metembed {

namespace {

std::uint64_t common_grid(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t l = a / g;
    if (l > UINT64_MAX / b) throw CapacityError("interval grids too fine to combine");
    return l * b;
}

std::uint64_t intersection_count(const std::vector<IntervalSet::Cell>& x,
                                 const std::vector<IntervalSet::Cell>& y) {
    std::uint64_t total = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        auto lo = std::max(x[i].first, y[j].first);
        auto hi = std::min(x[i].second, y[j].second);
        if (lo < hi) total += hi - lo;
        if (x[i].second < y[j].second)
            ++i;
        else
            ++j;
    }
    return total;
}

}  // namespace

IntervalSet::IntervalSet(std::uint64_t den) : den_(den) {
    if (den == 0) throw ValidationError("interval denominator must be positive");
}

IntervalSet::IntervalSet(std::uint64_t den, std::vector<Cell> cells)
    : den_(den), cells_(std::move(cells)) {
    if (den == 0) throw ValidationError("interval denominator must be positive");
    for (auto [p, q] : cells_)
        if (p >= q || q > den_)
            throw ValidationError("cell [" + std::to_string(p) + ", " + std::to_string(q) +
                                  ") invalid over denominator " + std::to_string(den_));
    normalize();
}

void IntervalSet::normalize() {
    std::sort(cells_.begin(), cells_.end());
    std::vector<Cell> merged;
    merged.reserve(cells_.size());
    for (auto c : cells_) {
        if (!merged.empty() && c.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, c.second);
        else
            merged.push_back(c);
    }
    cells_ = std::move(merged);
}

std::uint64_t IntervalSet::count() const {
    std::uint64_t total = 0;
    for (auto [p, q] : cells_) total += q - p;
    return total;
}

Rational IntervalSet::measure() const {
    return Rational(Integer(count()), Integer(den_));
}

IntervalSet IntervalSet::rescaled(std::uint64_t den) const {
    if (den % den_ != 0)
        throw ValidationError("cannot rescale denominator " + std::to_string(den_) + " to " +
                              std::to_string(den));
    const std::uint64_t k = den / den_;
    IntervalSet out(den);
    out.cells_.reserve(cells_.size());
    for (auto [p, q] : cells_) out.cells_.emplace_back(p * k, q * k);
    return out;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
    auto g = common_grid(den_, other.den_);
    auto a = rescaled(g);
    auto b = other.rescaled(g);
    return intersection_count(a.cells_, b.cells_) == a.count();
}

IntervalSet unite(const IntervalSet& u, const IntervalSet& v) {
    auto g = common_grid(u.denominator(), v.denominator());
    auto a = u.rescaled(g);
    auto b = v.rescaled(g);
    std::vector<IntervalSet::Cell> cells = a.cells();
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return IntervalSet(g, std::move(cells));
}

Rational intersection_measure(const IntervalSet& u, const IntervalSet& v) {
    auto g = common_grid(u.denominator(), v.denominator());
    auto a = u.rescaled(g);
    auto b = v.rescaled(g);
    return Rational(Integer(intersection_count(a.cells(), b.cells())), Integer(g));
}

Rational symm_diff_measure(const IntervalSet& u, const IntervalSet& v) {
    auto g = common_grid(u.denominator(), v.denominator());
    auto a = u.rescaled(g);
    auto b = v.rescaled(g);
    std::uint64_t both = intersection_count(a.cells(), b.cells());
    return Rational(Integer(a.count() + b.count() - 2 * both), Integer(g));
}

IntervalSet tile(const IntervalSet& s) {
    const std::uint64_t g = s.denominator();
    if (g > UINT32_MAX) throw CapacityError("tile: denominator too large to square");
    std::vector<IntervalSet::Cell> cells;
    cells.reserve(s.cells().size() * g);
    for (std::uint64_t u = 0; u < g; ++u)
        for (auto [p, q] : s.cells()) cells.emplace_back(u * g + p, u * g + q);
    return IntervalSet(g * g, std::move(cells));
}

IntervalSet place_in_quarter(const IntervalSet& s, int quarter, std::uint64_t den) {
    const std::uint64_t g = s.denominator();
    std::vector<IntervalSet::Cell> cells;
    cells.reserve(s.cells().size());
    const auto shift = static_cast<std::uint64_t>(quarter) * g;
    for (auto [p, q] : s.cells()) cells.emplace_back(shift + p, shift + q);
    return IntervalSet(4 * g, std::move(cells)).rescaled(den);
}

}  // namespace metembed
