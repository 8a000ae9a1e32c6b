#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gfb/analysis.hpp"
#include "gfb/subdivision.hpp"
#include "gfb/tiling.hpp"
#include "oracles.hpp"

using namespace gfb;

namespace {

constexpr double kZeta3 = 1.2020569031595942853997;

bool brackets(const SeriesValue& s, double truth, double slack = 1e-14) {
    return s.value <= truth + slack && truth <= s.upper() + slack;
}

mpq_class exact(const MomentValue& m) {
    REQUIRE(m.exact.has_value());
    return *m.exact;
}

} // namespace

TEST_CASE("zeta values") {
    const double pi = std::numbers::pi;
    const SeriesValue z2 = zeta(2.0);
    CHECK(z2.value == doctest::Approx(pi * pi / 6).epsilon(1e-12));
    CHECK(brackets(z2, pi * pi / 6));
    CHECK(brackets(zeta(4.0), pi * pi * pi * pi / 90));
    const SeriesValue z3 = zeta(3.0);
    CHECK(z3.tail_bound <= 1e-12);
    CHECK(brackets(z3, kZeta3));
    CHECK(zeta(1.5).value == doctest::Approx(2.6123753486854883).epsilon(1e-10));
    CHECK_THROWS_AS(zeta(1.0), DomainError);
    CHECK_THROWS_AS(zeta(0.5), DomainError);
}

TEST_CASE("compensated summation") {
    CompensatedSum s;
    s.add(1e16);
    s.add(1.0);
    s.add(-1e16);
    CHECK(s.result() == 1.0);
    CompensatedSum a, b;
    for (int i = 0; i < 1000; ++i) a.add(0.1);
    for (int i = 0; i < 1000; ++i) b.add(0.1);
    a.merge(b);
    CHECK(a.result() == doctest::Approx(200.0).epsilon(1e-15));
}

TEST_CASE("moment spot values") {
    CHECK(exact(moment(Algorithm::A, 1, 2, MomentMode::Exact)) == mpq_class(5, 48));
    CHECK(exact(moment(Algorithm::B, 2, 2, MomentMode::Exact)) == mpq_class(1, 8));
    for (int n = 0; n <= 6; ++n) CHECK(exact(moment(Algorithm::A, n, 1, MomentMode::Exact)) == 1);
    for (int n = 0; n <= 18; ++n) CHECK(exact(moment(Algorithm::B, n, 1, MomentMode::Exact)) == 1);
}

TEST_CASE("exact moments equal the oracle brute force") {
    for (int beta : {2, 3}) {
        for (int n = 0; n <= 3; ++n) {
            CHECK(exact(moment(Algorithm::A, n, beta, MomentMode::Exact)) == oracle::moment(oracle::tiling_a(n), beta));
        }
        for (int n = 0; n <= 9; ++n) {
            CHECK(exact(moment(Algorithm::B, n, beta, MomentMode::Exact)) == oracle::moment(oracle::tiling_b(n), beta));
        }
    }
}

TEST_CASE("float moments track the exact ones") {
    for (auto [algo, n] : {std::pair{Algorithm::A, 5}, std::pair{Algorithm::B, 14}}) {
        const MomentValue e = moment(algo, n, 2, MomentMode::Exact);
        const MomentValue f = moment(algo, n, 2, MomentMode::Float);
        CHECK(f.mode == ArithmeticMode::CompensatedFloat);
        CHECK(f.value == doctest::Approx(e.exact->get_d()).epsilon(1e-14));
    }
    const MomentValue half = moment(Algorithm::A, 3, 1.5);
    CHECK(half.mode == ArithmeticMode::CompensatedFloat);
    double ref = 0;
    for (const auto& t : oracle::tiling_a(3)) ref += std::pow(oracle::shoelace(t).get_d(), 1.5);
    CHECK(half.value == doctest::Approx(ref).epsilon(1e-13));
    CHECK_THROWS_AS(moment(Algorithm::A, 3, 1.5, MomentMode::Exact), InvalidInput);
    CHECK_THROWS_AS(moment(Algorithm::A, 3, 0.5), DomainError);
    CHECK_THROWS_AS(moment(Algorithm::A, 40, 2), CapacityError);
}

TEST_CASE("moments do not depend on the worker count") {
    for (auto [algo, n] : {std::pair{Algorithm::A, 6}, std::pair{Algorithm::B, 18}}) {
        const double one = moment(algo, n, 2.5, MomentMode::Float, 1).value;
        for (int jobs : {2, 3, 8}) CHECK(moment(algo, n, 2.5, MomentMode::Float, jobs).value == one);
        const auto d1 = moments_by_depth(algo, n, 2.0, 1);
        const auto d8 = moments_by_depth(algo, n, 2.0, 8);
        CHECK(d1 == d8);
        for (int k = 0; k <= n; k += 3) {
            CHECK(d1[k] == doctest::Approx(moment(algo, k, 2.0, MomentMode::Float).value).epsilon(1e-14));
        }
    }
    CHECK(exact(moment(Algorithm::A, 5, 2, MomentMode::Exact, 1)) == exact(moment(Algorithm::A, 5, 2, MomentMode::Exact, 8)));
}

TEST_CASE("classical moments") {
    CHECK(exact(classical_moment(1, 2, MomentMode::Exact)) == mpq_class(1, 2));
    CHECK(exact(classical_moment(2, 2, MomentMode::Exact)) == mpq_class(5, 18));
    for (int n = 0; n <= 20; n += 4) CHECK(exact(classical_moment(n, 1, MomentMode::Exact)) == 1);
    for (int n = 1; n <= 8; ++n) {
        const auto level = oracle::brocot_level(n);
        mpq_class ref = 0;
        for (std::size_t i = 0; i + 1 < level.size(); ++i) {
            mpq_class len(1, level[i].second * level[i + 1].second);
            ref += len * len * len;
        }
        CHECK(exact(classical_moment(n, 3, MomentMode::Exact)) == ref);
    }
    CHECK(classical_moment(24, 2).mode == ArithmeticMode::CompensatedFloat);
}

TEST_CASE("Dirichlet series heads") {
    for (double beta : {4.0, 5.0, 6.5}) {
        const SeriesValue l1 = dirichlet_L(Algorithm::A, beta, 1);
        CHECK(l1.value == doctest::Approx(10.0).epsilon(1e-15));
        CHECK(l1.terms_used == 4);
        CHECK(l1.tail_bound == doctest::Approx((32.0 / 3.0) / (beta - 3.0)).epsilon(1e-15));
        const SeriesValue l2 = dirichlet_L(Algorithm::A, beta, 2);
        CHECK(l2.value == doctest::Approx(10.0 + 28.0 / std::pow(2.0, beta)).epsilon(1e-15));
        CHECK(l2.terms_used == 9);
    }
    CHECK_THROWS_AS(dirichlet_L(Algorithm::A, 3.0, 10), DomainError);
    CHECK_THROWS_AS(dirichlet_L(Algorithm::Classical, 4.0, 10), InvalidInput);
}

TEST_CASE("algorithm B series head equals a brute-force degree count") {
    constexpr int kDepth = 12;
    constexpr Int kQ = 4;
    for (const auto& r : vertices_up_to(Algorithm::B, kQ)) REQUIRE(r.first_depth < kDepth);
    const auto prev = oracle::census(oracle::tiling_b(kDepth - 1));
    const auto last = oracle::census(oracle::tiling_b(kDepth));
    mpq_class ref = 0;
    for (const auto& [p, d] : last.degree) {
        if (!prev.degree.count(p)) continue;
        const mpz_class q = oracle::den(p);
        if (q > kQ) continue;
        ref += mpq_class(d, q * q * q * q);
    }
    CHECK(dirichlet_L(Algorithm::B, 4.0, kQ).value == doctest::Approx(ref.get_d()).epsilon(1e-15));
}

TEST_CASE("adaptive series reaches its tolerance") {
    const SeriesValue l = dirichlet_L_adaptive(Algorithm::A, 6.0, 0.01);
    CHECK(l.tail_bound < 0.01 * l.value);
    const SeriesValue fine = dirichlet_L(Algorithm::A, 6.0, 64);
    CHECK(fine.value >= l.value);
    CHECK(fine.value <= l.upper());
}

TEST_CASE("classical L against a totient sum") {
    for (double beta : {3.5, 4.0, 6.0}) {
        constexpr long N = 3000;
        double ref = 0;
        for (long q = 1; q <= N; ++q) ref += 2.0 * oracle::totient(q) * std::pow(static_cast<double>(q), -beta);
        const double tail = 2.0 * std::pow(static_cast<double>(N), 2.0 - beta) / (beta - 2.0);
        const SeriesValue L = classical_L(beta);
        CHECK(L.value <= ref + tail + 1e-12);
        CHECK(ref <= L.upper() + 1e-12);
    }
    const double pi = std::numbers::pi;
    CHECK(classical_L(4.0).midpoint() == doctest::Approx(2 * kZeta3 * 90 / (pi * pi * pi * pi)).epsilon(1e-12));
    CHECK_THROWS_AS(classical_L(2.0), DomainError);
}

TEST_CASE("main terms") {
    const SeriesValue L{3.0, 0.0, 0};
    CHECK(main_term(Algorithm::A, 3, 2.0, L) == doctest::Approx(3.0 / 324.0));
    CHECK(main_term(Algorithm::B, 3, 2.0, L) == doctest::Approx(4.0 * 3.0 / 81.0));
    CHECK(main_term(Algorithm::Classical, 4, 2.0, L) == doctest::Approx(3.0 / 16.0));
    const AsymptoticPoint p = asymptotic_ratio(Algorithm::Classical, 10, 2.0);
    CHECK(p.ratio == doctest::Approx(p.sigma / p.main_term));
    CHECK(p.main_term == doctest::Approx(2.0 / 100.0 * kZeta3 * 90 / std::pow(std::numbers::pi, 4)).epsilon(1e-10));
    CHECK_THROWS_AS(asymptotic_ratio(Algorithm::A, 1, 2.0), InvalidInput);
    CHECK_THROWS_AS(asymptotic_ratio(Algorithm::A, 3, 1.0), DomainError);
}

TEST_CASE("classical ratio approaches one") {
    const double r5 = asymptotic_ratio(Algorithm::Classical, 5, 2.0).ratio;
    const double r20 = asymptotic_ratio(Algorithm::Classical, 20, 2.0).ratio;
    CHECK(std::abs(r20 - 1) < std::abs(r5 - 1));
}

TEST_CASE("summability bounds") {
    const CumulativeCheck a = cumulative_moment_check(Algorithm::A, 2.0, 7);
    CHECK(a.holds);
    CHECK(a.bound == doctest::Approx(16.0 / 3.0 * std::pow(std::numbers::pi, 8) / 8100.0).epsilon(1e-10));
    CHECK(cumulative_moment_check(Algorithm::A, 1.5, 6).holds);
    const CumulativeCheck b = cumulative_moment_check(Algorithm::B, 2.0, 20);
    CHECK(b.holds);
    CHECK(b.bound == doctest::Approx(32.0 / 3.0 * 4.0 * std::pow(std::numbers::pi, 8) / 8100.0).epsilon(1e-10));
    CHECK_THROWS_AS(cumulative_moment_check(Algorithm::A, 1.0, 3), DomainError);
    CHECK(is_positive_integer(3.0));
    CHECK_FALSE(is_positive_integer(2.5));
    CHECK_FALSE(is_positive_integer(0.0));
}
