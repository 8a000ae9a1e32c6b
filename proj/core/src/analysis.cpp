#include "gfb/analysis.hpp"

#include <cmath>
#include <limits>

#include "gfb/subdivision.hpp"
#include "gfb/tiling.hpp"
#include "gfb/census.hpp"

namespace gfb {

namespace {

int moment_capacity(Algorithm algo) {
    switch (algo) {
    case Algorithm::A: return 10;
    case Algorithm::B: return 26;
    case Algorithm::Classical: return 30;
    }
    return 0;
}

int exact_capacity(Algorithm algo) {
    switch (algo) {
    case Algorithm::A: return 8;
    case Algorithm::B: return 22;
    case Algorithm::Classical: return 22;
    }
    return 0;
}

// Fixed, job-independent partition of the tree for parallel sums.
int split_depth(Algorithm algo, int depth) { return std::min(depth, algo == Algorithm::A ? 2 : 6); }

void check_beta(double beta) {
    if (!std::isfinite(beta) || beta < 1.0) throw DomainError("moment order beta must be >= 1");
}

double tile_power(const Basis& b, double beta) {
    const double den = 2.0 * static_cast<double>(b.g[0].x) * static_cast<double>(b.g[1].x) *
                       static_cast<double>(b.g[2].x);
    return std::pow(den, -beta);
}

mpq_class exact_tile_power(const Basis& b, unsigned long beta) {
    mpz_class den = mpz_class(b.g[0].x) * b.g[1].x;
    den *= b.g[2].x;
    den *= 2;
    mpz_class powered;
    mpz_pow_ui(powered.get_mpz_t(), den.get_mpz_t(), beta);
    return mpq_class(mpz_class(1), powered);
}

// Exact sum over the tiles at `depth` below `start`, accumulated bottom-up so
// intermediate denominators stay those of small subtrees.
mpq_class exact_subtree_sum(Algorithm algo, const SubtreeStart& start, int depth, unsigned long beta) {
    std::vector<mpq_class> acc(static_cast<std::size_t>(depth - start.basis.depth) + 1);
    const int base = start.basis.depth;
    mpq_class total = 0;
    walk_from(
        algo, start, depth,
        [&](const Node& node) {
            if (node.depth() == depth) acc[depth - base] += exact_tile_power(node.basis, beta);
            return true;
        },
        [&](int d) {
            if (d == base) {
                total += acc[0];
            } else {
                acc[d - base - 1] += acc[d - base];
            }
            acc[d - base] = 0;
        });
    return total;
}

CompensatedSum float_subtree_sum(Algorithm algo, const SubtreeStart& start, int depth, double beta) {
    CompensatedSum sum;
    walk_from(algo, start, depth, [&](const Node& node) {
        if (node.depth() == depth) sum.add(tile_power(node.basis, beta));
        return true;
    });
    return sum;
}

// Stern-Brocot intervals [p/q, p'/q'] at depth n have length 1/(q q').
template <class Leaf>
void walk_intervals(int depth, Leaf&& leaf) {
    struct Frame {
        Int q_left;
        Int q_right;
        int depth;
    };
    std::vector<Frame> stack{{1, 1, 0}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.depth == depth) {
            leaf(f.q_left, f.q_right);
            continue;
        }
        const Int mid = checked_add(f.q_left, f.q_right);
        stack.push_back({mid, f.q_right, f.depth + 1});
        stack.push_back({f.q_left, mid, f.depth + 1});
    }
}

double zeta_upper(double s) { return zeta(s).upper(); }

} // namespace

std::string_view to_string(ArithmeticMode mode) {
    return mode == ArithmeticMode::Exact ? "exact" : "compensated-float";
}

bool is_positive_integer(double beta) {
    return std::isfinite(beta) && beta >= 1.0 && std::abs(beta - std::round(beta)) < 1e-12;
}

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        comp_ += (sum_ - t) + x;
    } else {
        comp_ += (x - t) + sum_;
    }
    sum_ = t;
}

void CompensatedSum::merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
}

SeriesValue zeta(double s, double tolerance) {
    if (!std::isfinite(s) || s <= 1.0) throw DomainError("zeta(s) needs s > 1");
    if (!(tolerance > 0.0)) throw InvalidInput("zeta: tolerance must be positive");
    // sum_{k>K} k^-s lies in [int_K^inf x^-s dx - K^-s / 2, int_{K+1/2}^inf x^-s dx]
    // (trapezoid and midpoint bounds for a convex decreasing summand).
    auto bracket = [s](double K) {
        const double lower = std::pow(K, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(K, -s);
        const double upper = std::pow(K + 0.5, 1.0 - s) / (s - 1.0);
        return std::pair{lower, upper};
    };
    constexpr std::uint64_t kMaxTerms = std::uint64_t{1} << 27;
    CompensatedSum partial;
    std::uint64_t k = 0;
    std::uint64_t target = 16;
    for (;;) {
        while (k < target) {
            ++k;
            partial.add(std::pow(static_cast<double>(k), -s));
        }
        auto [lo, hi] = bracket(static_cast<double>(k));
        const double width = hi - lo;
        if (width <= tolerance || k >= kMaxTerms) {
            return SeriesValue{partial.result() + lo, std::max(width, 0.0), k};
        }
        target = k * 2;
    }
}

MomentValue moment(Algorithm algo, int depth, double beta, MomentMode mode, int jobs) {
    check_beta(beta);
    if (algo == Algorithm::Classical) return classical_moment(depth, beta, mode);
    if (depth < 0) throw InvalidInput("moment: negative depth");
    if (depth > moment_capacity(algo)) {
        throw CapacityError("moment: depth " + std::to_string(depth) + " exceeds capacity " +
                            std::to_string(moment_capacity(algo)));
    }
    const bool integral = is_positive_integer(beta);
    bool exact = false;
    if (mode == MomentMode::Exact) {
        if (!integral) throw InvalidInput("exact moments need a positive integer beta");
        if (depth > exact_capacity(algo)) {
            throw CapacityError("exact moment: depth " + std::to_string(depth) + " exceeds capacity " +
                                std::to_string(exact_capacity(algo)));
        }
        exact = true;
    } else if (mode == MomentMode::Auto) {
        exact = integral && tile_count(algo, depth) <= kExactTileCap;
    }

    const auto starts = subtree_starts(algo, split_depth(algo, depth));
    MomentValue out;
    out.depth = depth;
    out.beta = beta;
    if (exact) {
        const auto b = static_cast<unsigned long>(std::lround(beta));
        auto parts = parallel_map(starts.size(), jobs,
                                  [&](std::size_t i) { return exact_subtree_sum(algo, starts[i], depth, b); });
        mpq_class total = 0;
        for (const auto& p : parts) total += p;
        total.canonicalize();
        out.mode = ArithmeticMode::Exact;
        out.value = total.get_d();
        out.exact = std::move(total);
    } else {
        auto parts = parallel_map(starts.size(), jobs,
                                  [&](std::size_t i) { return float_subtree_sum(algo, starts[i], depth, beta); });
        CompensatedSum total;
        for (const auto& p : parts) total.merge(p);
        out.mode = ArithmeticMode::CompensatedFloat;
        out.value = total.result();
    }
    return out;
}

MomentValue classical_moment(int depth, double beta, MomentMode mode) {
    check_beta(beta);
    if (depth < 0) throw InvalidInput("classical_moment: negative depth");
    if (depth > moment_capacity(Algorithm::Classical)) {
        throw CapacityError("classical_moment: depth exceeds capacity 30");
    }
    const bool integral = is_positive_integer(beta);
    bool exact = false;
    if (mode == MomentMode::Exact) {
        if (!integral) throw InvalidInput("exact moments need a positive integer beta");
        if (depth > exact_capacity(Algorithm::Classical)) {
            throw CapacityError("exact classical moment: depth exceeds capacity 22");
        }
        exact = true;
    } else if (mode == MomentMode::Auto) {
        exact = integral && tile_count(Algorithm::Classical, depth) <= kExactTileCap;
    }
    MomentValue out;
    out.depth = depth;
    out.beta = beta;
    if (exact) {
        const auto b = static_cast<unsigned long>(std::lround(beta));
        // Pairwise bottom-up accumulation keeps operands small.
        std::vector<mpq_class> level;
        level.reserve(std::size_t{1} << std::min(depth, 24));
        walk_intervals(depth, [&](Int ql, Int qr) {
            mpz_class den = mpz_class(ql) * qr;
            mpz_class powered;
            mpz_pow_ui(powered.get_mpz_t(), den.get_mpz_t(), b);
            level.emplace_back(mpz_class(1), powered);
        });
        while (level.size() > 1) {
            std::vector<mpq_class> next((level.size() + 1) / 2);
            for (std::size_t i = 0; i < next.size(); ++i) {
                next[i] = level[2 * i];
                if (2 * i + 1 < level.size()) next[i] += level[2 * i + 1];
            }
            level.swap(next);
        }
        mpq_class total = level.front();
        total.canonicalize();
        out.mode = ArithmeticMode::Exact;
        out.value = total.get_d();
        out.exact = std::move(total);
    } else {
        CompensatedSum sum;
        walk_intervals(depth, [&](Int ql, Int qr) {
            sum.add(std::pow(static_cast<double>(ql) * static_cast<double>(qr), -beta));
        });
        out.mode = ArithmeticMode::CompensatedFloat;
        out.value = sum.result();
    }
    return out;
}

std::vector<double> moments_by_depth(Algorithm algo, int max_depth, double beta, int jobs) {
    check_beta(beta);
    if (max_depth < 0) throw InvalidInput("moments_by_depth: negative depth");
    if (algo == Algorithm::Classical) {
        std::vector<double> out;
        for (int n = 0; n <= max_depth; ++n) out.push_back(classical_moment(n, beta, MomentMode::Float).value);
        return out;
    }
    if (max_depth > moment_capacity(algo)) throw CapacityError("moments_by_depth: depth exceeds capacity");
    const int split = split_depth(algo, max_depth);
    std::vector<CompensatedSum> sums(static_cast<std::size_t>(max_depth) + 1);
    walk(algo, split, [&](const Node& node) {
        sums[node.depth()].add(tile_power(node.basis, beta));
        return true;
    });
    const auto starts = subtree_starts(algo, split);
    auto parts = parallel_map(starts.size(), jobs, [&](std::size_t i) {
        std::vector<CompensatedSum> local(static_cast<std::size_t>(max_depth) + 1);
        walk_from(algo, starts[i], max_depth, [&](const Node& node) {
            if (node.depth() > split) local[node.depth()].add(tile_power(node.basis, beta));
            return true;
        });
        return local;
    });
    for (const auto& local : parts) {
        for (int d = split + 1; d <= max_depth; ++d) sums[d].merge(local[d]);
    }
    std::vector<double> out;
    for (const auto& s : sums) out.push_back(s.result());
    return out;
}

SeriesValue dirichlet_L(Algorithm algo, double beta, Int qmax) {
    if (algo == Algorithm::Classical) throw InvalidInput("dirichlet_L: use classical_L for the 1-D algorithm");
    if (!std::isfinite(beta) || beta <= 3.0) throw DomainError("dirichlet_L needs beta > 3");
    if (qmax < 1) throw InvalidInput("dirichlet_L: qmax must be >= 1");
    const DegreeTable table = harvested_degrees(algo, qmax);
    SeriesValue out;
    if (is_positive_integer(beta)) {
        const auto b = static_cast<unsigned long>(std::lround(beta));
        mpq_class head = 0;
        for (const auto& [v, deg] : table.degree) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(v.x), b);
            head += mpq_class(mpz_class(deg), den);
        }
        head.canonicalize();
        out.value = head.get_d();
    } else {
        CompensatedSum head;
        for (const auto& [v, deg] : table.degree) head.add(deg * std::pow(static_cast<double>(v.x), -beta));
        out.value = head.result();
    }
    out.terms_used = table.degree.size();
    out.tail_bound = 8.0 * (4.0 / 3.0) * std::pow(static_cast<double>(qmax), 3.0 - beta) / (beta - 3.0);
    return out;
}

SeriesValue dirichlet_L_adaptive(Algorithm algo, double beta, double rel_tol) {
    if (!(rel_tol > 0.0)) throw InvalidInput("dirichlet_L_adaptive: tolerance must be positive");
    for (Int q = 8;; q *= 2) {
        SeriesValue L = dirichlet_L(algo, beta, q);
        if (L.tail_bound < rel_tol * L.value) return L;
        if (q > 4096) throw CapacityError("dirichlet_L_adaptive: tolerance not reached by qmax 8192");
    }
}

SeriesValue classical_L(double beta) {
    if (!std::isfinite(beta) || beta <= 2.0) throw DomainError("classical_L needs beta > 2");
    const SeriesValue num = zeta(beta - 1.0);
    const SeriesValue den = zeta(beta);
    const double lower = 2.0 * num.value / den.upper();
    const double upper = 2.0 * num.upper() / den.value;
    return SeriesValue{lower, upper - lower, num.terms_used + den.terms_used};
}

SeriesValue asymptotic_constant(Algorithm algo, double beta) {
    if (!std::isfinite(beta) || beta <= 1.0) throw DomainError("asymptotics need beta > 1");
    if (algo == Algorithm::Classical) return classical_L(2.0 * beta);
    return dirichlet_L_adaptive(algo, 3.0 * beta, 0.01);
}

double main_term(Algorithm algo, int n, double beta, const SeriesValue& L) {
    const double nn = static_cast<double>(n);
    const double l = L.midpoint();
    switch (algo) {
    case Algorithm::A: return l / std::pow(2.0 * nn * nn, beta);
    case Algorithm::B: return std::pow(2.0, beta) * l / std::pow(nn, 2.0 * beta);
    case Algorithm::Classical: return l / std::pow(nn, beta);
    }
    return 0.0;
}

std::vector<AsymptoticPoint> asymptotic_sweep(Algorithm algo, int n_from, int n_to, double beta, int jobs) {
    if (n_from < 2 || n_to < n_from) throw InvalidInput("asymptotic sweep needs 2 <= n_from <= n_to");
    const SeriesValue L = asymptotic_constant(algo, beta);
    std::vector<AsymptoticPoint> out;
    for (int n = n_from; n <= n_to; ++n) {
        const MomentValue m = moment(algo, n, beta, MomentMode::Auto, jobs);
        AsymptoticPoint p;
        p.n = n;
        p.beta = beta;
        p.sigma = m.value;
        p.main_term = main_term(algo, n, beta, L);
        p.ratio = p.sigma / p.main_term;
        p.L_value = L.midpoint();
        p.L_tail_bound = L.tail_bound;
        p.mode = m.mode;
        out.push_back(p);
    }
    return out;
}

AsymptoticPoint asymptotic_ratio(Algorithm algo, int n, double beta, int jobs) {
    return asymptotic_sweep(algo, n, n, beta, jobs).front();
}

CumulativeCheck cumulative_moment_check(Algorithm algo, double beta, int max_depth, int jobs) {
    if (!std::isfinite(beta) || beta <= 1.0) throw DomainError("cumulative check needs beta > 1");
    if (algo == Algorithm::Classical) throw InvalidInput("cumulative check is defined for algorithms A and B");
    const auto per_depth = moments_by_depth(algo, max_depth, beta, jobs);
    CompensatedSum partial;
    for (double s : per_depth) partial.add(s);
    const double zetas = zeta_upper(2.0 * beta) * zeta_upper(3.0 * beta - 2.0);
    CumulativeCheck out;
    out.max_depth = max_depth;
    out.beta = beta;
    out.partial_sum = partial.result();
    out.bound = algo == Algorithm::A ? (16.0 / 3.0) * zetas : (32.0 / 3.0) * std::pow(2.0, beta) * zetas;
    out.holds = out.partial_sum <= out.bound;
    return out;
}

} // namespace gfb
