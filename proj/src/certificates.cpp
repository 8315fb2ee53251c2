#include "metembed/certificates.hpp"

#include "metembed/errors.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <vector>

namespace metembed {

namespace {

struct Sums {
    std::int64_t plus = 0;
    std::int64_t minus = 0;
};

Sums pair_sums(const DistanceMatrix& d, const Eigen::VectorXi& k) {
    Sums s;
    std::vector<Eigen::Index> nz;
    for (Eigen::Index i = 0; i < k.size(); ++i)
        if (k(i)) nz.push_back(i);
    for (std::size_t a = 0; a < nz.size(); ++a)
        for (std::size_t b = a + 1; b < nz.size(); ++b) {
            std::int64_t p = std::int64_t{k(nz[a])} * k(nz[b]) * d(nz[a], nz[b]);
            if (p > 0)
                s.plus += p;
            else
                s.minus -= p;
        }
    return s;
}

// Strict order on candidate quality: a larger bound wins; no bound loses.
int compare_bounds(const Sums& x, const Sums& y) {
    if (x.minus == 0 || y.minus == 0) return (x.minus != 0) - (y.minus != 0);
    auto lhs = static_cast<__int128>(x.plus) * y.minus;
    auto rhs = static_cast<__int128>(y.plus) * x.minus;
    return (lhs > rhs) - (lhs < rhs);
}

bool lex_less(const Eigen::VectorXi& x, const Eigen::VectorXi& y) {
    return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(),
                                        y.data() + y.size());
}

struct Candidate {
    Eigen::VectorXi k;
    Sums sums;
    bool valid = false;
};

// Exhaustive tie-break: bound first, then the lexicographically least vector.
bool exhaustive_better(const Candidate& x, const Candidate& y) {
    if (!y.valid) return x.valid;
    if (!x.valid) return false;
    int c = compare_bounds(x.sums, y.sums);
    if (c != 0) return c > 0;
    return lex_less(x.k, y.k);
}

// Local tie-break: bound, then smaller l1 norm, then lexicographic.
bool local_better(const Candidate& x, const Candidate& y) {
    if (!y.valid) return x.valid;
    if (!x.valid) return false;
    int c = compare_bounds(x.sums, y.sums);
    if (c != 0) return c > 0;
    auto nx = x.k.lpNorm<1>();
    auto ny = y.k.lpNorm<1>();
    if (nx != ny) return nx < ny;
    return lex_less(x.k, y.k);
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (p > cap / base) return cap + 1;
        p *= base;
    }
    return p;
}

SearchResult finish(const DistanceMatrix& d, const Candidate& best, std::uint64_t evaluations,
                    std::string region) {
    SearchResult out;
    out.bound = 1;
    out.evaluations = evaluations;
    out.region = std::move(region);
    if (best.valid) {
        out.best = verify_certificate(d, WeightAssignment(best.k));
        if (out.best->bound && *out.best->bound > out.bound) out.bound = *out.best->bound;
    }
    return out;
}

SearchResult exhaustive_search(const DistanceMatrix& d, const SearchOptions& opt) {
    const auto n = static_cast<std::size_t>(d.rows());
    const auto span = static_cast<std::uint64_t>(opt.hi - opt.lo + 1);
    const bool symmetric = opt.lo == -opt.hi;
    const std::uint64_t cap = 4'000'000'000'000'000'000ULL;
    const std::uint64_t total = checked_power(span, n, cap);
    const std::uint64_t pruned = symmetric ? total / 2 + 1 : total;
    if (total > cap || pruned > opt.exhaustive_limit)
        throw CapacityError("exhaustive search over [" + std::to_string(opt.lo) + ", " +
                            std::to_string(opt.hi) + "]^" + std::to_string(n) +
                            " exceeds the limit of " + std::to_string(opt.exhaustive_limit) +
                            " vectors; use the local strategy");

    const int threads = std::max(1, opt.threads);
    std::vector<Candidate> best(static_cast<std::size_t>(threads));
    std::vector<std::uint64_t> evaluated(static_cast<std::size_t>(threads), 0);

    auto work = [&](int t) {
        const std::uint64_t begin = total / threads * t + std::min<std::uint64_t>(t, total % threads);
        const std::uint64_t end = begin + total / threads + (static_cast<std::uint64_t>(t) < total % threads);
        Eigen::VectorXi k(static_cast<Eigen::Index>(n));
        // Vertex 0 is the most significant digit, so index order is lexicographic.
        std::uint64_t rest = begin;
        for (std::size_t i = n; i-- > 0;) {
            k(static_cast<Eigen::Index>(i)) = opt.lo + static_cast<int>(rest % span);
            rest /= span;
        }
        Candidate cand;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (idx != begin) {
                for (std::size_t i = n; i-- > 0;) {
                    auto& digit = k(static_cast<Eigen::Index>(i));
                    if (digit < opt.hi) {
                        ++digit;
                        break;
                    }
                    digit = opt.lo;
                }
            }
            const int sum = k.sum();
            bool keep = sum == 0 || sum == 1;
            if (symmetric) {
                int first = 0;
                for (Eigen::Index i = 0; i < k.size() && first == 0; ++i) first = k(i);
                keep = first > 0 && (sum == 0 || sum == 1 || sum == -1);
            }
            if (!keep || k.isZero()) continue;
            ++evaluated[t];
            cand.k = sum == -1 ? Eigen::VectorXi(-k) : k;
            cand.sums = pair_sums(d, cand.k);
            cand.valid = true;
            if (exhaustive_better(cand, best[t])) best[t] = cand;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    Candidate winner;
    std::uint64_t evaluations = 0;
    for (int t = 0; t < threads; ++t) {
        evaluations += evaluated[t];
        if (exhaustive_better(best[t], winner)) winner = best[t];
    }
    std::string region = "all k in [" + std::to_string(opt.lo) + ", " + std::to_string(opt.hi) +
                         "]^" + std::to_string(n) + " with sum in {0, 1}";
    if (symmetric) region += ", up to negation (first nonzero weight positive)";
    region += "; " + std::to_string(evaluations) + " vectors evaluated";
    return finish(d, winner, evaluations, std::move(region));
}

class LocalSearch {
public:
    LocalSearch(const DistanceMatrix& d, const SearchOptions& opt)
        : d_(d), opt_(opt), rng_(opt.seed), n_(d.rows()) {}

    SearchResult run() {
        Candidate current;
        if (opt_.start) {
            if (opt_.start->size() != n_)
                throw ValidationError("start vector has " + std::to_string(opt_.start->size()) +
                                      " entries, metric has " + std::to_string(n_));
            for (Eigen::Index i = 0; i < n_; ++i)
                if ((*opt_.start)(i) < opt_.lo || (*opt_.start)(i) > opt_.hi)
                    throw ValidationError("start vector leaves the weight range");
            WeightAssignment check(*opt_.start);
            current = evaluate(check.weights());
        } else {
            current = random_point();
        }
        Candidate best = current;
        std::uint64_t restarts = 0;

        while (evaluations_ < opt_.budget) {
            Candidate step;
            for (Eigen::Index i = 0; i < n_ && evaluations_ < opt_.budget; ++i) {
                for (int delta : {1, -1}) {
                    const int value = current.k(i) + delta;
                    const int sum = current.k.sum() + delta;
                    if (value < opt_.lo || value > opt_.hi || (sum != 0 && sum != 1)) continue;
                    Candidate next = moved(current, i, value);
                    if (sum == 0 && next.k.isZero()) continue;
                    if (local_better(next, step)) step = std::move(next);
                    if (evaluations_ >= opt_.budget) break;
                }
            }
            if (step.valid && compare_bounds(step.sums, current.sums) > 0) {
                current = std::move(step);
            } else {
                if (evaluations_ >= opt_.budget) break;
                ++restarts;
                current = random_point();
            }
            if (local_better(current, best)) best = current;
        }

        std::string region = "local search in [" + std::to_string(opt_.lo) + ", " +
                             std::to_string(opt_.hi) + "]^" + std::to_string(n_) + ", seed " +
                             std::to_string(opt_.seed) + ", " + std::to_string(evaluations_) +
                             " evaluations, " + std::to_string(restarts) + " restarts";
        auto out = finish(d_, best, evaluations_, std::move(region));
        out.seed = opt_.seed;
        return out;
    }

private:
    Candidate evaluate(const Eigen::VectorXi& k) {
        ++evaluations_;
        return {k, pair_sums(d_, k), true};
    }

    // Re-evaluates after setting k(i) = value, touching only pairs through i.
    Candidate moved(const Candidate& c, Eigen::Index i, int value) {
        ++evaluations_;
        Candidate next = c;
        const int old = c.k(i);
        for (Eigen::Index j = 0; j < n_; ++j) {
            if (j == i || c.k(j) == 0) continue;
            const std::int64_t before = std::int64_t{old} * c.k(j) * d_(i, j);
            const std::int64_t after = std::int64_t{value} * c.k(j) * d_(i, j);
            if (before > 0) next.sums.plus -= before;
            if (before < 0) next.sums.minus += before;
            if (after > 0) next.sums.plus += after;
            if (after < 0) next.sums.minus -= after;
        }
        next.k(i) = value;
        return next;
    }

    Candidate random_point() {
        std::uniform_int_distribution<int> weight(opt_.lo, opt_.hi);
        std::uniform_int_distribution<Eigen::Index> pick(0, n_ - 1);
        Eigen::VectorXi k(n_);
        for (Eigen::Index i = 0; i < n_; ++i) k(i) = weight(rng_);
        int sum = k.sum();
        while (sum != 0 && sum != 1) {
            auto i = pick(rng_);
            if (sum > 1 && k(i) > opt_.lo) {
                --k(i);
                --sum;
            } else if (sum < 0 && k(i) < opt_.hi) {
                ++k(i);
                ++sum;
            }
        }
        if (k.isZero()) k(pick(rng_)) = 1;
        return evaluate(k);
    }

    const DistanceMatrix& d_;
    const SearchOptions& opt_;
    std::mt19937_64 rng_;
    Eigen::Index n_;
    std::uint64_t evaluations_ = 0;
};

}  // namespace

WeightAssignment::WeightAssignment(Eigen::VectorXi weights) : k_(std::move(weights)) {
    const int sum = k_.sum();
    if (sum != 0 && sum != 1)
        throw ValidationError("weights sum to " + std::to_string(sum) + "; expected 0 or 1");
    if (sum == 0 && k_.isZero()) throw ValidationError("all-zero weight vector");
    kind_ = sum;
}

Certificate verify_certificate(const DistanceMatrix& d, const WeightAssignment& w) {
    if (w.size() != d.rows())
        throw ValidationError("weight vector has " + std::to_string(w.size()) +
                              " entries, metric has " + std::to_string(d.rows()) + " points");
    auto [plus, minus] = signed_pair_sums(d, w.weights());
    Certificate c{w, plus, minus, std::nullopt, false};
    if (minus > 0)
        c.bound = make_rational(plus, minus);
    else if (plus > 0)
        c.non_embeddable = true;
    return c;
}

WeightAssignment paper_weights_L2(const LevelGraph& g) {
    if (g.family() != Family::laakso || g.level() != 2)
        throw ValidationError("paper_weights_L2 needs the level-2 Laakso graph");
    Eigen::VectorXi k = Eigen::VectorXi::Zero(static_cast<Eigen::Index>(g.vertex_count()));
    for (auto [copy, sign] : {std::pair{Branch::C, 1}, {Branch::F, 1}, {Branch::D, -1},
                              {Branch::E, -1}}) {
        for (Anchor middle : {Anchor::L, Anchor::R}) k(g.resolve({{copy}, middle})) = sign;
    }
    return WeightAssignment(std::move(k));
}

WeightAssignment paper_weights_D2(const LevelGraph& g) {
    if (g.family() != Family::diamond || g.level() != 2)
        throw ValidationError("paper_weights_D2 needs the level-2 diamond graph");
    Eigen::VectorXi k = Eigen::VectorXi::Zero(static_cast<Eigen::Index>(g.vertex_count()));
    for (auto [copy, sign] : {std::pair{Branch::P1a, 1}, {Branch::P2b, 1}, {Branch::P1b, -1},
                              {Branch::P2a, -1}}) {
        for (Anchor middle : {Anchor::P, Anchor::Q}) k(g.resolve({{copy}, middle})) = sign;
    }
    return WeightAssignment(std::move(k));
}

SearchResult search_certificates(const DistanceMatrix& d, const SearchOptions& options) {
    if (options.lo > 0 || options.hi < 0 || options.lo >= options.hi)
        throw ValidationError("weight range must contain 0 and at least one nonzero value");
    if (d.rows() < 1) throw ValidationError("empty metric");
    if (options.strategy == SearchStrategy::exhaustive) return exhaustive_search(d, options);
    return LocalSearch(d, options).run();
}

}  // namespace metembed
