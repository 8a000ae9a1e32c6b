#include "gfb/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gfb/analysis.hpp"
#include "gfb/census.hpp"
#include "gfb/subdivision.hpp"
#include "gfb/tiling.hpp"

namespace gfb {

namespace {

// Depth caps that keep a full verify run within seconds.
constexpr int kCapA = 6;
constexpr int kCapB = 16;
constexpr int kCapClassical = 20;
constexpr int kExactGeometryDepth = 4;
constexpr Int kCompletenessQ = 15;
constexpr int kContractionChains = 1000;
constexpr Int kContractionMaxDen = 100;
constexpr std::uint64_t kContractionSeed = 20240607;

int cap(Algorithm algo) {
    switch (algo) {
    case Algorithm::A: return kCapA;
    case Algorithm::B: return kCapB;
    case Algorithm::Classical: return kCapClassical;
    }
    return 0;
}

std::string vec_str(const LatticeVector& v) {
    return RationalPoint(v).label();
}

std::string basis_str(const Basis& b) {
    std::ostringstream os;
    os << '{' << vec_str(b.g[0]) << ' ' << vec_str(b.g[1]) << ' ' << vec_str(b.g[2]) << "} depth "
       << b.depth;
    return os.str();
}

std::string node_str(const Node& node) {
    std::string out = basis_str(node.basis);
    if (node.code_a) out += " code " + node.code_a->to_string();
    if (node.code_b) out += " code " + node.code_b->to_string();
    out += " root " + std::to_string(node.root);
    return out;
}

std::string depth_range(int hi) { return "depth 0.." + std::to_string(hi); }

/// Collects cases and the first failure of a check.
struct Tally {
    std::uint64_t cases = 0;
    std::string witness;
    bool failed = false;

    void fail(std::string w) {
        if (!failed) {
            failed = true;
            witness = std::move(w);
        }
    }
};

CheckReport finish(Tally&& t, std::string parameters) {
    CheckReport r;
    r.parameters = std::move(parameters);
    r.cases = t.cases;
    r.status = t.failed ? CheckStatus::Fail : CheckStatus::Pass;
    r.witness = std::move(t.witness);
    return r;
}

Int q_min(const Basis& b) { return std::min({b.g[0].x, b.g[1].x, b.g[2].x}); }
Int q_max(const Basis& b) { return std::max({b.g[0].x, b.g[1].x, b.g[2].x}); }

mpz_class q_product(const Basis& b) {
    mpz_class p = b.g[0].x;
    p *= b.g[1].x;
    p *= b.g[2].x;
    return p;
}

CheckReport check_unimodularity(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, cap(algo));
    Tally t;
    if (algo == Algorithm::Classical) {
        std::vector<Fraction> level{{0, 1}, {1, 1}};
        for (int n = 0; n <= hi; ++n) {
            if (n > 0) level = step_1d(level);
            for (std::size_t i = 0; i + 1 < level.size(); ++i) {
                ++t.cases;
                const auto& l = level[i];
                const auto& r = level[i + 1];
                if (checked_mul(r.num, l.den) - checked_mul(l.num, r.den) != 1) {
                    t.fail("neighbours " + std::to_string(l.num) + "/" + std::to_string(l.den) + ", " +
                           std::to_string(r.num) + "/" + std::to_string(r.den) + " at depth " +
                           std::to_string(n));
                }
            }
        }
        return finish(std::move(t), depth_range(hi));
    }
    walk(algo, hi, [&](const Node& node) {
        ++t.cases;
        if (!is_unimodular(node.basis)) {
            t.fail(node_str(node) + " det " + std::to_string(det(node.basis)));
        }
        return true;
    });
    return finish(std::move(t), depth_range(hi));
}

CheckReport check_regular_partition(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, cap(algo));
    Tally t;
    if (algo == Algorithm::Classical) {
        std::vector<Fraction> level{{0, 1}, {1, 1}};
        for (int n = 0; n <= hi; ++n) {
            if (n > 0) level = step_1d(level);
            mpq_class total = 0;
            for (std::size_t i = 0; i + 1 < level.size(); ++i) {
                ++t.cases;
                mpq_class l(level[i].num, level[i].den), r(level[i + 1].num, level[i + 1].den);
                l.canonicalize();
                r.canonicalize();
                if (!(l < r)) t.fail("non-increasing neighbours at depth " + std::to_string(n));
                total += r - l;
            }
            if (total != 1) t.fail("interval lengths sum to " + total.get_str() + " at depth " + std::to_string(n));
        }
        return finish(std::move(t), depth_range(hi));
    }
    const int geo = std::min(hi, kExactGeometryDepth);
    // Exact geometry: containment, disjoint interiors and area balance per parent.
    walk(algo, std::max(geo - 1, 0), [&](const Node& node) {
        if (node.depth() >= geo) return false;
        const Basis& p = node.basis;
        std::vector<Basis> kids;
        for (int i = 0; i < branching(algo); ++i) kids.push_back(child(algo, p, i));
        mpq_class sum = 0;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            ++t.cases;
            for (const auto& v : kids[i].g) {
                if (!in_closed_cone(p, v)) {
                    t.fail("child " + std::to_string(i) + " of " + node_str(node) + " leaves the parent at " +
                           vec_str(v));
                }
            }
            for (std::size_t j = i + 1; j < kids.size(); ++j) {
                if (!interiors_disjoint(kids[i], kids[j])) {
                    t.fail("children " + std::to_string(i) + " and " + std::to_string(j) + " of " +
                           node_str(node) + " overlap");
                }
            }
            sum += shoelace_area(Triangle::from_basis(kids[i]));
        }
        if (sum != shoelace_area(Triangle::from_basis(p))) {
            t.fail("child areas of " + node_str(node) + " sum to " + sum.get_str());
        }
        return true;
    });
    // Area balance over whole levels.
    for (int n = 0; n <= hi; ++n) {
        const auto summary = enumerate(algo, n, [](const Tile&) {});
        ++t.cases;
        if (summary.total_area != 1) {
            t.fail("total area " + summary.total_area.get_str() + " at depth " + std::to_string(n));
        }
    }
    return finish(std::move(t), "geometry depth 0.." + std::to_string(geo) + ", area sums " + depth_range(hi));
}

CheckReport check_area_lemma2(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, cap(algo));
    Tally t;
    walk(algo, hi, [&](const Node& node) {
        ++t.cases;
        const Triangle tri = Triangle::from_basis(node.basis);
        if (area(tri) != shoelace_area(tri)) {
            t.fail(node_str(node) + " shoelace " + shoelace_area(tri).get_str() + " vs " + area(tri).get_str());
        }
        return true;
    });
    return finish(std::move(t), depth_range(hi));
}

CheckReport check_sigma1(Algorithm algo, int limit, int jobs) {
    const int hi = std::min(limit, cap(algo));
    Tally t;
    for (int n = 0; n <= hi; ++n) {
        ++t.cases;
        const MomentValue m = algo == Algorithm::Classical ? classical_moment(n, 1.0, MomentMode::Exact)
                                                           : moment(algo, n, 1.0, MomentMode::Exact, jobs);
        if (!m.exact || *m.exact != 1) {
            t.fail("sigma_{" + std::to_string(n) + ",1} = " + (m.exact ? m.exact->get_str() : std::to_string(m.value)));
        }
    }
    return finish(std::move(t), depth_range(hi));
}

CheckReport check_lemma4(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, kCapA);
    Tally t;
    walk(algo, std::max(hi - 1, 0), [&](const Node& node) {
        if (node.depth() >= hi) return false;
        const auto& g = node.basis.g;
        for (int i = 0; i < kChildrenA; ++i) {
            const Basis c = child_a(node.basis, i);
            for (int j = 0; j < 3; ++j) {
                if (std::find(c.g.begin(), c.g.end(), g[j]) != c.g.end()) continue;
                ++t.cases;
                const Int floor_q = std::min(g[(j + 1) % 3].x, g[(j + 2) % 3].x);
                if (q_min(c) < floor_q) {
                    t.fail("child " + std::to_string(i) + " of " + node_str(node) + " without vertex " +
                           vec_str(g[j]) + " has q " + std::to_string(q_min(c)) + " < " + std::to_string(floor_q));
                }
            }
        }
        return true;
    });
    return finish(std::move(t), "parents " + depth_range(std::max(hi - 1, 0)));
}

CheckReport check_lemma7(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, 8);
    Tally t;
    walk(algo, hi, [&](const Node& node) {
        ++t.cases;
        const auto r = node.code_a->length();
        const Int bound = Int{1} << (r / 2);
        if (q_min(node.basis) < bound) {
            t.fail(node_str(node) + " min q " + std::to_string(q_min(node.basis)) + " < " + std::to_string(bound));
        }
        return true;
    });
    return finish(std::move(t), depth_range(hi));
}

CheckReport check_lemma8(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, algo == Algorithm::A ? 8 : kCapB);
    Tally t;
    walk(algo, hi, [&](const Node& node) {
        ++t.cases;
        if (q_max(node.basis) > checked_mul(node.depth() + 1, q_min(node.basis))) {
            t.fail(node_str(node) + " max q " + std::to_string(q_max(node.basis)) + " > (depth+1) * " +
                   std::to_string(q_min(node.basis)));
        }
        return true;
    });
    return finish(std::move(t), depth_range(hi));
}

CheckReport check_lemma13(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, kCapB);
    const int chain_parents = std::min(hi, 6);
    constexpr int kMaxZeros = 12;
    Tally t;
    walk(algo, hi, [&](const Node& node) {
        const auto& [a, b, c] = node.basis.g;
        ++t.cases;
        if (!(b.x + c.x >= a.x && a.x >= b.x && b.x >= c.x)) {
            t.fail("(i) fails at " + node_str(node));
        }
        if (node.parent && node.index == 0 && q_product(node.basis) < 2 * q_product(*node.parent)) {
            t.fail("(ii) op-1 child " + node_str(node) + " exceeds half the parent area");
        }
        if (node.depth() <= chain_parents) {
            Basis cur = node.basis;
            for (Int k = 1; k <= kMaxZeros; ++k) {
                cur = child_b(cur, 1);
                const LatticeVector ea = k % 2 == 0 ? LatticeVector::add_multiple(a, k / 2, c)
                                                    : LatticeVector::add_multiple(b, (k + 1) / 2, c);
                const LatticeVector eb = k % 2 == 0 ? LatticeVector::add_multiple(b, k / 2, c)
                                                    : LatticeVector::add_multiple(a, (k - 1) / 2, c);
                const bool formula = cur.g[0] == ea && cur.g[1] == eb && cur.g[2] == c;
                const bool growth = 2 * cur.g[0].x >= (k + 1) * c.x && 2 * cur.g[1].x >= (k + 1) * c.x;
                if (!formula || !growth) {
                    t.fail("(iii) after " + std::to_string(k) + " zero steps from " + node_str(node) + ": " +
                           basis_str(cur));
                }
            }
        }
        return true;
    });
    return finish(std::move(t), depth_range(hi) + ", zero runs k<=12 from " + depth_range(chain_parents));
}

CheckReport check_lemma16(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, kExactGeometryDepth);
    Tally t;
    walk(algo, hi, [&](const Node& node) {
        const auto& [a, b, c] = node.basis.g;
        for (int d0 = 0; d0 < 2; ++d0) {
            const Basis first = child_b(node.basis, d0);
            for (int d1 = 0; d1 < 2; ++d1) {
                ++t.cases;
                const Basis last = child_b(child_b(child_b(first, d1), 0), 1);
                const LatticeVector& cc = last.g[2];
                const bool ok = cc == b + c && cc != a && cc != b && cc != c &&
                                std::find(first.g.begin(), first.g.end(), cc) != first.g.end();
                if (!ok) {
                    t.fail("prefix " + std::to_string(b_bit(d0)) + std::to_string(b_bit(d1)) + "10 from " +
                           node_str(node) + " ends at " + vec_str(cc));
                }
            }
        }
        return true;
    });
    return finish(std::move(t), "parents " + depth_range(hi));
}

CheckReport check_theorem1(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, 12);
    Tally t;
    std::mt19937_64 rng(kContractionSeed);
    // Modulo draws keep the sequence identical across standard libraries.
    auto draw = [&](Int lo, Int hi_incl) { return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi_incl - lo + 1)); };
    for (int i = 0; i < kContractionChains; ++i) {
        const Int q1 = draw(1, kContractionMaxDen), q2 = draw(1, kContractionMaxDen);
        const Int p1 = draw(0, q1), p2 = draw(0, q2);
        const RationalPoint theta = RationalPoint::from_coords(mpq_class(p1, q1), mpq_class(p2, q2));
        const DescentChain chain = locate(algo, theta, hi);
        mpq_class prev = squared_diameter(Triangle::from_basis(chain.bases[0]));
        for (int nu = 1; nu <= hi; ++nu) {
            const mpq_class cur = squared_diameter(Triangle::from_basis(chain.bases[nu]));
            // Tight factor for a step-(v-1) parent is v/(v+1): its denominators are at
            // most v * min q. The looser 1 - 1/v already fails at v = 2.
            {
                ++t.cases;
                if (cur * ((nu + 1) * (nu + 1)) > prev * (nu * nu)) {
                    t.fail("theta " + theta.to_string() + " step " + std::to_string(nu) + ": " +
                           basis_str(chain.bases[nu]));
                }
            }
            prev = cur;
        }
    }
    return finish(std::move(t), std::to_string(kContractionChains) + " chains, denominators <= " +
                                    std::to_string(kContractionMaxDen) + ", steps 1.." + std::to_string(hi));
}

CheckReport check_completeness(Algorithm algo, int, int) {
    Tally t;
    const auto found = vertices_up_to(algo, kCompletenessQ);
    std::map<LatticeVector, int> first;
    for (const auto& r : found) first.emplace(r.vertex, r.first_depth);
    for (Int q = 1; q <= kCompletenessQ; ++q) {
        for (Int a1 = 0; a1 <= q; ++a1) {
            for (Int a2 = 0; a2 <= q; ++a2) {
                const LatticeVector v{q, a1, a2};
                if (!v.is_primitive()) continue;
                ++t.cases;
                auto it = first.find(v);
                if (it == first.end()) {
                    t.fail(vec_str(v) + " never appears");
                } else if (algo == Algorithm::A && it->second > q) {
                    t.fail(vec_str(v) + " first appears at depth " + std::to_string(it->second) + " > q");
                }
            }
        }
    }
    if (found.size() != t.cases) t.fail("search returned " + std::to_string(found.size()) + " vertices");
    return finish(std::move(t), "q <= " + std::to_string(kCompletenessQ));
}

CheckReport check_census_formulas(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, cap(algo));
    Tally t;
    for (int n = 0; n <= hi; ++n) {
        ++t.cases;
        const Census got = census(algo, n);
        const Census want = census_formula(algo, n);
        std::uint64_t hist_v = 0, hist_2r = 0;
        for (auto [d, count] : got.degree_histogram) {
            hist_v += count;
            hist_2r += static_cast<std::uint64_t>(d) * count;
        }
        const bool counts = got.f == want.f && got.r == want.r && got.v == want.v;
        const bool hist = algo == Algorithm::B || got.degree_histogram == want.degree_histogram;
        const bool euler = got.v + got.f == got.r + 1;
        if (!counts || !hist || hist_v != got.v || hist_2r != 2 * got.r || !euler) {
            t.fail("depth " + std::to_string(n) + ": f " + std::to_string(got.f) + " r " + std::to_string(got.r) +
                   " v " + std::to_string(got.v));
        }
    }
    return finish(std::move(t), depth_range(hi));
}

CheckReport check_degree_set(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, cap(algo));
    Tally t;
    for (int n = 1; n <= hi; ++n) {
        const TriangulationGraph g = build_graph(algo, n);
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            const bool stable = algo == Algorithm::A || g.first_depth[i] <= n - 1;
            ++t.cases;
            const auto& v = g.vertices[i];
            const bool boundary = v.y1 == 0 || v.y2 == 0 || v.y1 == v.x || v.y2 == v.x;
            const bool ok = stable ? allowed_stable_degree(algo, g.degree[i]) : g.degree[i] == (boundary ? 3 : 4);
            if (!ok) {
                t.fail((stable ? "stable" : "frontier") + std::string(" vertex ") + vec_str(g.vertices[i]) +
                       " has degree " + std::to_string(g.degree[i]) + " at depth " + std::to_string(n));
            }
        }
    }
    return finish(std::move(t), "depth 1.." + std::to_string(hi));
}

CheckReport check_degree_stability(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, cap(algo));
    constexpr int kAhead = 3;
    Tally t;
    std::vector<TriangulationGraph> graphs;
    for (int n = 0; n <= hi; ++n) graphs.push_back(build_graph(algo, n));
    for (int n = 1; n <= hi; ++n) {
        const DegreeTable base = stable_degrees(graphs[n]);
        for (int k = 1; k <= kAhead && n + k <= hi; ++k) {
            const TriangulationGraph& later = graphs[n + k];
            for (const auto& [v, d] : base.degree) {
                ++t.cases;
                const auto idx = later.index_of(v);
                if (!idx || later.degree[*idx] != d) {
                    t.fail(vec_str(v) + " has degree " + std::to_string(d) + " at depth " + std::to_string(n) +
                           " but " + (idx ? std::to_string(later.degree[*idx]) : "none") + " at depth " +
                           std::to_string(n + k));
                }
            }
        }
    }
    if (algo == Algorithm::A) {
        const std::set<LatticeVector> corners{{1, 0, 0}, {1, 1, 1}};
        for (const auto& g : graphs) {
            std::set<LatticeVector> two;
            for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                if (g.degree[i] == 2) two.insert(g.vertices[i]);
            }
            ++t.cases;
            if (two != corners) t.fail("degree-2 vertices differ from (0,0),(1,1) at depth " + std::to_string(g.depth));
        }
    }
    // The pruned harvest must agree with the explicit graph on small vertices.
    if (hi >= 1) {
        const Int qmax = algo == Algorithm::A ? hi + 1 : 12;
        const DegreeTable harvested = harvested_degrees(algo, qmax);
        const DegreeTable stable = stable_degrees(graphs[hi]);
        for (const auto& [v, d] : stable.degree) {
            if (v.x > qmax) continue;
            ++t.cases;
            const auto h = harvested.find(v);
            if (!h || *h != d) {
                t.fail("harvested degree of " + vec_str(v) + " is " + (h ? std::to_string(*h) : "missing") +
                       ", graph says " + std::to_string(d));
            }
        }
    }
    return finish(std::move(t), "depth 1.." + std::to_string(hi) + ", lookahead " + std::to_string(kAhead));
}

CheckReport check_max_area(Algorithm algo, int limit, int) {
    const int hi = std::min(limit, 7);
    Tally t;
    std::vector<mpz_class> smallest(static_cast<std::size_t>(hi) + 1);
    walk(algo, hi, [&](const Node& node) {
        const mpz_class p = q_product(node.basis);
        auto& s = smallest[node.depth()];
        if (s == 0 || p < s) s = p;
        return true;
    });
    for (int n = 0; n <= hi; ++n) {
        ++t.cases;
        const mpz_class want = (n + 1) * (n + 1);
        if (smallest[n] != want) {
            t.fail("depth " + std::to_string(n) + " max area 1/" + mpz_class(2 * smallest[n]).get_str() +
                   ", expected 1/" + mpz_class(2 * want).get_str());
        }
    }
    return finish(std::move(t), depth_range(hi));
}

CheckReport cumulative_report(Algorithm algo, const std::vector<std::pair<double, int>>& runs, int jobs) {
    Tally t;
    std::ostringstream params;
    for (const auto& [beta, depth] : runs) {
        ++t.cases;
        const CumulativeCheck c = cumulative_moment_check(algo, beta, depth, jobs);
        params << (t.cases > 1 ? "; " : "") << "beta " << beta << " n<=" << depth;
        if (!c.holds) {
            std::ostringstream w;
            w.precision(17);
            w << "beta " << beta << " N " << depth << ": partial sum " << c.partial_sum << " > bound " << c.bound;
            t.fail(w.str());
        }
    }
    return finish(std::move(t), params.str());
}

CheckReport check_lemma9(Algorithm algo, int limit, int jobs) {
    return cumulative_report(algo, {{2.0, std::min(limit, 9)}, {1.5, std::min(limit, 6)}}, jobs);
}

CheckReport check_lemma14(Algorithm algo, int limit, int jobs) {
    return cumulative_report(algo, {{2.0, std::min(limit, 20)}, {1.5, std::min(limit, 16)}}, jobs);
}

bool any_algo(Algorithm) { return true; }
bool two_d(Algorithm a) { return a != Algorithm::Classical; }
bool only_a(Algorithm a) { return a == Algorithm::A; }
bool only_b(Algorithm a) { return a == Algorithm::B; }

struct Registered {
    const char* name;
    const char* reference;
    bool (*applies)(Algorithm);
    CheckReport (*run)(Algorithm, int, int);
};

const std::vector<Registered>& registry() {
    static const std::vector<Registered> checks{
        {"unimodularity", "every basis has det = +-1 (neighbouring fractions satisfy p'q - pq' = 1)", any_algo,
         check_unimodularity},
        {"regular-partition", "children tile the parent: contained, interiors disjoint, areas sum to the parent",
         any_algo, check_regular_partition},
        {"area-lemma2", "area = 1/(2 q(a) q(b) q(c)) equals the shoelace area", two_d, check_area_lemma2},
        {"sigma1", "sigma_{n,1} = 1 exactly", any_algo, check_sigma1},
        {"lemma4", "a child without parent vertex a has every q >= min(q(b), q(c))", only_a, check_lemma4},
        {"lemma7", "min q >= 2^floor(r/2) for a tile with code length r", only_a, check_lemma7},
        {"lemma8", "max q <= (depth+1) * min q", two_d, check_lemma8},
        {"lemma13",
         "q(b)+q(c) >= q(a) >= q(b) >= q(c); op-1 child has at most half the area; k zero steps follow the "
         "mediant formulas with q(a'), q(b') >= (k+1)/2 q(c)",
         only_b, check_lemma13},
        {"lemma16", "after prefixes d0 d1 1 0 the last vertex is b+c, new relative to the start, a vertex after d0",
         only_b, check_lemma16},
        {"theorem1-contraction", "diam(step v) <= (1 - 1/(v+1)) diam(step v-1) along located chains", only_a,
         check_theorem1},
        {"completeness", "every primitive vector with small q is a vertex (A: first depth <= q)", two_d,
         check_completeness},
        {"census-formulas", "faces, edges, vertices and degree counts match the closed forms; v - r + f = 1", two_d,
         check_census_formulas},
        {"degree-set", "stable degrees lie in {2,3,5,8} (A) or {3,5,8} (B); frontier vertices of B have degree 4 (3 on the square's boundary)",
         two_d, check_degree_set},
        {"degree-stability", "stable degrees never change at later steps; the pruned harvest agrees", two_d,
         check_degree_stability},
        {"max-area", "largest tile at step v has area 1/(2 (v+1)^2)", only_a, check_max_area},
        {"lemma9-bound", "sum_n sigma_{n,beta} <= (16/3) zeta(2 beta) zeta(3 beta - 2)", only_a, check_lemma9},
        {"lemma14-bound", "sum_n sigma_{n,beta} <= (32/3) 2^beta zeta(2 beta) zeta(3 beta - 2)", only_b,
         check_lemma14},
    };
    return checks;
}

} // namespace

std::string_view to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& c : registry()) out.emplace_back(c.name);
        return out;
    }();
    return names;
}

bool interiors_disjoint(const Basis& a, const Basis& b) {
    auto separates = [](const Basis& s, const Basis& other) {
        for (int e = 0; e < 3; ++e) {
            const auto& p = s.g[e];
            const auto& q = s.g[(e + 1) % 3];
            const int inside = orientation(p, q, s.g[(e + 2) % 3]);
            bool all_out = true;
            for (const auto& w : other.g) {
                if (orientation(p, q, w) * inside > 0) {
                    all_out = false;
                    break;
                }
            }
            if (all_out) return true;
        }
        return false;
    };
    return separates(a, b) || separates(b, a);
}

std::vector<CheckReport> run_checks(Algorithm algo, int depth_limit, std::span<const std::string> selection,
                                    int jobs) {
    if (depth_limit < 0) throw InvalidInput("verify: depth limit must be >= 0");
    std::set<std::string> wanted;
    bool all = selection.empty();
    for (const auto& name : selection) {
        if (name == "all") {
            all = true;
            continue;
        }
        if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
            throw InvalidInput("unknown check '" + name + "'");
        }
        wanted.insert(name);
    }
    std::vector<CheckReport> out;
    for (const auto& c : registry()) {
        if (!all && !wanted.count(c.name)) continue;
        CheckReport r;
        if (c.applies(algo)) {
            r = c.run(algo, depth_limit, jobs);
        } else {
            r.parameters = "not applicable to algorithm " + std::string(to_string(algo));
        }
        r.name = c.name;
        r.reference = c.reference;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace gfb
