// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance [--csv PATH] [--known-deviation N]...
//
// Exit status is 0 when every criterion passes or fails only as a listed,
// documented deviation; such criteria still print FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfb/analysis.hpp"
#include "gfb/census.hpp"
#include "gfb/cli.hpp"
#include "gfb/tiling.hpp"
#include "gfb/verify.hpp"

using namespace gfb;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t out = 1;
    while (e-- > 0) out *= b;
    return out;
}

Verdict census_a() {
    for (int n = 0; n <= 6; ++n) {
        const Census c = census(Algorithm::A, n);
        const std::uint64_t six = ipow(6, n), two = ipow(2, n);
        const std::map<int, std::uint64_t> hist{
            {2, 2}, {3, (2 * six + 8) / 5}, {5, 4 * two - 4}, {8, (6 * six + 14) / 10 - 2 * two}};
        std::map<int, std::uint64_t> want;
        for (auto [d, k] : hist) {
            if (k) want[d] = k;
        }
        if (c.f != 2 * six || c.r != two * (3 * ipow(3, n) + 2) || c.v != six + 2 * two + 1 ||
            c.degree_histogram != want) {
            return {false, "mismatch at depth " + std::to_string(n)};
        }
    }
    const Census c2 = census(Algorithm::A, 2);
    return {c2.f == 72 && c2.r == 116 && c2.v == 45, "depths 0..6 exact; depth 2 = (72,116,45)"};
}

Verdict census_b() {
    const std::set<int> stable_set{3, 5, 8};
    for (int n = 0; n <= 16; ++n) {
        const TriangulationGraph g = build_graph(Algorithm::B, n);
        const Census c = census(g);
        const int k = n / 2;
        const std::uint64_t p = ipow(2, k);
        const std::uint64_t r = n % 2 == 0 ? 3 * p * p + 2 * p : 6 * p * p + 2 * p;
        const std::uint64_t v = n % 2 == 0 ? (p + 1) * (p + 1) : (p + 1) * (p + 1) + p * p;
        if (c.f != ipow(2, n + 1) || c.r != r || c.v != v) return {false, "counts differ at depth " + std::to_string(n)};
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            const bool frontier = g.first_depth[i] == n;
            const int d = g.degree[i];
            if (n >= 1 && !frontier && !stable_set.count(d)) {
                return {false, "stable degree " + std::to_string(d) + " at depth " + std::to_string(n)};
            }
            if (!stable_set.count(d) && (!frontier || (d != 2 && d != 4))) {
                return {false, "degree " + std::to_string(d) + " outside {3,5,8} at depth " + std::to_string(n)};
            }
        }
    }
    const Census c4 = census(Algorithm::B, 4);
    return {c4.f == 32 && c4.r == 56 && c4.v == 25,
            "depths 0..16 exact; depth 4 = (32,56,25); degrees outside {3,5,8} are frontier 2 or 4"};
}

Verdict partition_of_unity() {
    for (int n = 0; n <= 7; ++n) {
        if (moment(Algorithm::A, n, 1, MomentMode::Exact).exact != mpq_class(1)) return {false, "A depth " + std::to_string(n)};
    }
    for (int n = 0; n <= 20; ++n) {
        if (moment(Algorithm::B, n, 1, MomentMode::Exact).exact != mpq_class(1)) return {false, "B depth " + std::to_string(n)};
        if (classical_moment(n, 1, MomentMode::Exact).exact != mpq_class(1)) return {false, "classical depth " + std::to_string(n)};
    }
    return {true, "A n<=7, B n<=20, classical n<=20 all exactly 1"};
}

Verdict area_lemma() {
    std::uint64_t tiles = 0;
    for (auto algo : {Algorithm::A, Algorithm::B}) {
        bool ok = true;
        walk(algo, 5, [&](const Node& node) {
            const Triangle t = Triangle::from_basis(node.basis);
            ++tiles;
            if (area(t) != shoelace_area(t)) ok = false;
            return ok;
        });
        if (!ok) return {false, "mismatch for algorithm " + std::string(to_string(algo))};
    }
    return {true, std::to_string(tiles) + " triangles at depths 0..5"};
}

Verdict max_area() {
    std::vector<mpz_class> smallest(8);
    walk(Algorithm::A, 7, [&](const Node& node) {
        mpz_class p(node.basis.g[0].x);
        p *= node.basis.g[1].x;
        p *= node.basis.g[2].x;
        auto& s = smallest[node.depth()];
        if (s == 0 || p < s) s = p;
        return true;
    });
    for (int n = 1; n <= 7; ++n) {
        if (mpq_class(1, 2 * smallest[n]) != mpq_class(1, 2 * (n + 1) * (n + 1))) {
            return {false, "depth " + std::to_string(n) + " max area 1/" + mpz_class(2 * smallest[n]).get_str()};
        }
    }
    return {true, "max area 1/(2(v+1)^2) for v=1..7; v=1 gives 1/8"};
}

Verdict denominator_lemmas() {
    const std::vector<std::string> a_checks{"lemma7", "lemma8"}, b_checks{"lemma8", "lemma13"};
    std::uint64_t cases = 0;
    for (const auto& r : run_checks(Algorithm::A, 8, a_checks)) {
        if (r.status != CheckStatus::Pass) return {false, "A " + r.name + ": " + r.witness};
        cases += r.cases;
    }
    for (const auto& r : run_checks(Algorithm::B, 16, b_checks)) {
        if (r.status != CheckStatus::Pass) return {false, "B " + r.name + ": " + r.witness};
        cases += r.cases;
    }
    return {true, std::to_string(cases) + " triangle checks (A depth<=8, B depth<=16)"};
}

Verdict contraction() {
    std::mt19937_64 rng(20240607);
    auto draw = [&](Int lo, Int hi) { return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    int literal_fail = 0, tight_fail = 0, steps = 0;
    std::string first;
    for (int i = 0; i < 1000; ++i) {
        const Int q1 = draw(1, 100), q2 = draw(1, 100);
        const Int p1 = draw(0, q1), p2 = draw(0, q2);
        mpq_class c1{mpz_class(p1), mpz_class(q1)}, c2{mpz_class(p2), mpz_class(q2)};
        c1.canonicalize();
        c2.canonicalize();
        const RationalPoint theta = RationalPoint::from_coords(c1, c2);
        const DescentChain c = locate(Algorithm::A, theta, 12);
        for (int nu = 2; nu <= 12; ++nu) {
            const double prev = diameter(Triangle::from_basis(c.bases[nu - 1]));
            const double cur = diameter(Triangle::from_basis(c.bases[nu]));
            ++steps;
            if (cur > (1.0 - 1.0 / nu) * prev + 1e-12) {
                if (first.empty()) first = "theta " + theta.to_string() + " step " + std::to_string(nu);
                ++literal_fail;
            }
            if (cur > (1.0 - 1.0 / (nu + 1)) * prev + 1e-12) ++tight_fail;
        }
    }
    return {literal_fail == 0, std::to_string(literal_fail) + "/" + std::to_string(steps) +
                                   " steps exceed 1-1/v (first: " + (first.empty() ? "none" : first) +
                                   "); factor 1-1/(v+1) violated " + std::to_string(tight_fail) + " times"};
}

Verdict completeness() {
    const auto a = vertices_up_to(Algorithm::A, 15);
    const auto b = vertices_up_to(Algorithm::B, 15);
    std::map<LatticeVector, int> fa, fb;
    for (const auto& r : a) fa.emplace(r.vertex, r.first_depth);
    for (const auto& r : b) fb.emplace(r.vertex, r.first_depth);
    int count = 0, deepest_b = 0;
    for (Int q = 1; q <= 15; ++q) {
        for (Int x = 0; x <= q; ++x) {
            for (Int y = 0; y <= q; ++y) {
                if (std::gcd(std::gcd(q, x), y) != 1) continue;
                ++count;
                const LatticeVector v{q, x, y};
                auto ia = fa.find(v);
                if (ia == fa.end() || ia->second > q) return {false, "A misses " + RationalPoint(v).label()};
                auto ib = fb.find(v);
                if (ib == fb.end()) return {false, "B misses " + RationalPoint(v).label()};
                deepest_b = std::max(deepest_b, ib->second);
            }
        }
    }
    return {true, std::to_string(count) + " primitive vectors with q<=15; A first depth<=q; B deepest first depth " +
                      std::to_string(deepest_b)};
}

Verdict summability() {
    const CumulativeCheck a = cumulative_moment_check(Algorithm::A, 2.0, 9);
    const CumulativeCheck b = cumulative_moment_check(Algorithm::B, 2.0, 20);
    return {a.holds && b.holds, fmt("A: %.6g <= %.6g; B: %.6g <= %.6g", a.partial_sum, a.bound, b.partial_sum, b.bound)};
}

Verdict classical_asymptotics() {
    const double z3 = zeta(3.0).midpoint(), z4 = zeta(4.0).midpoint();
    auto ratio = [&](int n) {
        const double sigma = classical_moment(n, 2, MomentMode::Exact).exact->get_d();
        return sigma * n * n / (2.0 * z3 / z4);
    };
    const double r5 = ratio(5), r20 = ratio(20);
    const bool ok = std::abs(r20 - 1) < 0.15 && std::abs(r20 - 1) < std::abs(r5 - 1);
    return {ok, fmt("ratio(5) = %.6f, ratio(20) = %.6f, |ratio(20)-1| = %.4f < 0.15", r5, r20, std::abs(r20 - 1))};
}

Verdict asymptotic_trends(const std::string& csv_path) {
    const auto a = asymptotic_sweep(Algorithm::A, 3, 9, 2.0);
    const auto b = asymptotic_sweep(Algorithm::B, 4, 20, 2.0);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "algo,n,beta,sigma,main_term,ratio,L_value,L_tail_bound\n";
        csv.precision(17);
        for (const auto* sweep : {&a, &b}) {
            const char* name = sweep == &a ? "a" : "b";
            for (const auto& p : *sweep) {
                csv << name << ',' << p.n << ',' << p.beta << ',' << p.sigma << ',' << p.main_term << ',' << p.ratio
                    << ',' << p.L_value << ',' << p.L_tail_bound << '\n';
            }
        }
    }
    bool positive = true, tails = true;
    for (const auto* sweep : {&a, &b}) {
        for (const auto& p : *sweep) {
            positive = positive && p.ratio > 0;
            tails = tails && p.L_tail_bound < 0.01 * p.L_value;
        }
    }
    // R(n_min + 1) against R(n_max): A uses R(4) vs R(9), B uses R(5) vs R(20).
    const double a_lo = a[1].ratio, a_hi = a.back().ratio;
    const double b_lo = b[1].ratio, b_hi = b.back().ratio;
    const bool trend = std::abs(a_hi - 1) < std::abs(a_lo - 1) && std::abs(b_hi - 1) < std::abs(b_lo - 1);
    return {positive && tails && trend,
            fmt("A: R(4)=%.4f -> R(9)=%.4f; B: R(5)=%.4f -> R(20)=%.4f", a_lo, a_hi, b_lo, b_hi) +
                (csv_path.empty() ? "" : "; archived in " + csv_path)};
}

Verdict determinism() {
    const std::vector<std::vector<std::string>> commands{
        {"census", "--algo", "b", "--depth", "12"},
        {"moments", "--algo", "a", "--depth", "7", "--beta", "5/2"},
        {"moments", "--algo", "b", "--depth", "20", "--beta", "2"},
        {"moments", "--algo", "a", "--depth", "4", "--beta", "3", "--exact"},
        {"dirichlet", "--algo", "b", "--beta", "6"},
        {"asym", "--algo", "a", "--n", "3..7", "--beta", "2"},
        {"asym", "--algo", "b", "--n", "4..16", "--beta", "3/2"},
        {"locate", "--algo", "a", "--point", "3/7,2/7", "--depth", "9"},
        {"verify", "--algo", "a", "--depth", "4"},
        {"classical", "--depth", "20", "--beta", "2"},
    };
    int compared = 0;
    for (auto cmd : commands) {
        cmd.insert(cmd.end(), {"--format", "json", "--jobs"});
        std::string payload[2];
        int k = 0;
        for (const char* jobs : {"1", "8"}) {
            auto args = cmd;
            args.push_back(jobs);
            std::ostringstream out, err;
            if (cli::run_cli(args, out, err) != 0) return {false, cmd[0] + " failed: " + err.str()};
            payload[k++] = nlohmann::ordered_json::parse(out.str())["result"].dump();
        }
        if (payload[0] != payload[1]) return {false, cmd[0] + " differs between --jobs 1 and 8"};
        ++compared;
    }
    std::ostringstream s1, s8, err;
    cli::run_cli({"render", "--algo", "b", "--depth", "5", "--jobs", "1"}, s1, err);
    cli::run_cli({"render", "--algo", "b", "--depth", "5", "--jobs", "8"}, s8, err);
    if (s1.str() != s8.str()) return {false, "render differs"};
    return {true, std::to_string(compared + 1) + " commands byte-identical under --jobs 1 and 8"};
}

} // namespace

int main(int argc, char** argv) {
    std::string csv_path;
    std::set<int> known;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--csv" && i + 1 < argc) {
            csv_path = argv[++i];
        } else if (arg == "--known-deviation" && i + 1 < argc) {
            known.insert(std::stoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: acceptance [--csv PATH] [--known-deviation N]...\n");
            return 2;
        }
    }

    struct Criterion {
        int id;
        const char* title;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "census exactness (A)", census_a},
        {2, "census exactness (B)", census_b},
        {3, "partition of unity", partition_of_unity},
        {4, "area lemma", area_lemma},
        {5, "max-area law (A)", max_area},
        {6, "denominator lemmas", denominator_lemmas},
        {7, "diameter contraction 1-1/v", contraction},
        {8, "completeness q<=15", completeness},
        {9, "summability bounds", summability},
        {10, "classical asymptotics", classical_asymptotics},
        {11, "asymptotic ratio trends", [&] { return asymptotic_trends(csv_path); }},
        {12, "determinism across --jobs", determinism},
    };

    int passed = 0, unexpected = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool documented = !v.pass && known.count(c.id);
        std::printf("[%s] %2d %-30s %s (%.2fs)%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(), secs,
                    documented ? " [documented deviation]" : "");
        std::fflush(stdout);
        passed += v.pass;
        unexpected += !v.pass && !documented;
    }
    std::printf("%d/%zu criteria pass; %d unexpected failure(s)\n", passed, criteria.size(), unexpected);
    return unexpected == 0 ? 0 : 1;
}
