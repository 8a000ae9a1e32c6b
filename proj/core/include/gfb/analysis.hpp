#pragma once

// Moments of the tilings, zeta values, truncated Dirichlet series with
// rigorous tail bounds, and the asymptotic-ratio diagnostics built from them.
// Floating point enters only here; every float sum runs in a fixed traversal
// order with compensated accumulation so results do not depend on --jobs.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gfb/lattice.hpp"

namespace gfb {

/// Truncated series: the true value lies in [value, value + tail_bound].
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    std::uint64_t terms_used = 0;

    double upper() const { return value + tail_bound; }
    double midpoint() const { return value + 0.5 * tail_bound; }
};

enum class ArithmeticMode { Exact, CompensatedFloat };
std::string_view to_string(ArithmeticMode mode);

enum class MomentMode { Auto, Exact, Float };

/// Auto mode sums exactly only up to this many tiles.
inline constexpr std::uint64_t kExactTileCap = 100000;

struct MomentValue {
    int depth = 0;
    double beta = 1.0;
    ArithmeticMode mode = ArithmeticMode::Exact;
    std::optional<mpq_class> exact;  ///< set in exact mode
    double value = 0.0;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x);
    void merge(const CompensatedSum& other);
    double result() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Riemann zeta for real s > 1 with a bracketed tail. Throws DomainError otherwise.
SeriesValue zeta(double s, double tolerance = 1e-12);

/// sigma_{n,beta}: sum over Til_n of (area)^beta, beta >= 1.
/// Exact mode needs an integer beta. Throws CapacityError when the depth is
/// beyond what a traversal can handle.
MomentValue moment(Algorithm algo, int depth, double beta, MomentMode mode = MomentMode::Auto,
                   int jobs = 1);

/// sigma_beta(F_n) for the one-dimensional Brocot partition, n <= 30.
MomentValue classical_moment(int depth, double beta, MomentMode mode = MomentMode::Auto);

/// sigma_{0,beta}, ..., sigma_{max_depth,beta} from one traversal (compensated float).
std::vector<double> moments_by_depth(Algorithm algo, int max_depth, double beta, int jobs = 1);

/// Truncated L(F, beta) = sum deg(a) / q(a)^beta over vertices with q <= qmax;
/// requires beta > 3. tail_bound = 8 * (4/3) * qmax^(3-beta) / (beta-3).
SeriesValue dirichlet_L(Algorithm algo, double beta, Int qmax);

/// dirichlet_L with qmax doubled from 8 until tail_bound < rel_tol * value.
SeriesValue dirichlet_L_adaptive(Algorithm algo, double beta, double rel_tol = 0.01);

/// 2 zeta(beta-1) / zeta(beta), beta > 2.
SeriesValue classical_L(double beta);

struct AsymptoticPoint {
    int n = 0;
    double beta = 0.0;
    double sigma = 0.0;
    double main_term = 0.0;
    double ratio = 0.0;
    double L_value = 0.0;
    double L_tail_bound = 0.0;
    ArithmeticMode mode = ArithmeticMode::CompensatedFloat;
};

/// Main term of the moment asymptotics:
///   A: L(A,3b) / (2 n^2)^b,  B: 2^b L(B,3b) / n^(2b),
///   classical: (2 / n^b) zeta(2b-1) / zeta(2b).
double main_term(Algorithm algo, int n, double beta, const SeriesValue& L);

/// The series used by main_term, truncated so the tail is below 1% of the value.
SeriesValue asymptotic_constant(Algorithm algo, double beta);

/// R(n) = sigma_{n,beta} / main term. Requires beta > 1, n >= 2.
AsymptoticPoint asymptotic_ratio(Algorithm algo, int n, double beta, int jobs = 1);
std::vector<AsymptoticPoint> asymptotic_sweep(Algorithm algo, int n_from, int n_to, double beta,
                                              int jobs = 1);

struct CumulativeCheck {
    int max_depth = 0;
    double beta = 0.0;
    double partial_sum = 0.0;
    double bound = 0.0;
    bool holds = false;
};

/// sum_{n <= N} sigma_{n,beta} against the summability bounds
///   A: (16/3) zeta(2b) zeta(3b-2),  B: (32/3) 2^b zeta(2b) zeta(3b-2).
CumulativeCheck cumulative_moment_check(Algorithm algo, double beta, int max_depth, int jobs = 1);

/// True when beta is a positive integer (within 1e-12).
bool is_positive_integer(double beta);

} // namespace gfb
