#include "gfb/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gfb {

int CodeA::depth() const { return std::accumulate(runs.begin(), runs.end(), 0); }

std::string CodeA::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < runs.size(); ++i) os << (i ? "," : "") << runs[i];
    os << ']';
    return os.str();
}

int CodeB::weight() const { return std::accumulate(bits.begin(), bits.end(), 0); }

std::string CodeB::to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

std::array<Basis, 2> initial_a() {
    return {Basis{{LatticeVector{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}, 0, Algorithm::A},
            Basis{{LatticeVector{1, 1, 0}, {1, 0, 1}, {1, 1, 1}}, 0, Algorithm::A}};
}

std::array<Basis, 2> initial_b() {
    return {Basis{{LatticeVector{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}, 0, Algorithm::B},
            Basis{{LatticeVector{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 0, Algorithm::B}};
}

std::array<Basis, 2> initial_bases(Algorithm algo) {
    switch (algo) {
    case Algorithm::A: return initial_a();
    case Algorithm::B: return initial_b();
    case Algorithm::Classical: break;
    }
    throw InvalidInput("the classical algorithm has no two-dimensional bases");
}

int branching(Algorithm algo) {
    switch (algo) {
    case Algorithm::A: return kChildrenA;
    case Algorithm::B: return kChildrenB;
    case Algorithm::Classical: return 2;
    }
    return 0;
}

Basis child_a(const Basis& p, int index) {
    const auto& [g1, g2, g3] = p.g;
    Basis c{{}, p.depth + 1, Algorithm::A};
    switch (index) {
    case 0: c.g = {g1, g1 + g2, g1 + g3}; break;
    case 1: c.g = {g2, g2 + g1, g2 + g3}; break;
    case 2: c.g = {g3, g3 + g1, g3 + g2}; break;
    case 3: c.g = {g1 + g2, g1 + g3, g1 + g2 + g3}; break;
    case 4: c.g = {g2 + g1, g2 + g3, g1 + g2 + g3}; break;
    case 5: c.g = {g3 + g1, g3 + g2, g1 + g2 + g3}; break;
    default: throw InvalidInput("algorithm A child index out of range");
    }
    return c;
}

Basis child_b(const Basis& p, int index) {
    const auto& [g1, g2, g3] = p.g;
    Basis c{{}, p.depth + 1, Algorithm::B};
    if (index == 0) {
        c.g = {g2 + g3, g1, g2};
    } else if (index == 1) {
        c.g = {g2 + g3, g1, g3};
    } else {
        throw InvalidInput("algorithm B child index out of range");
    }
    return c;
}

Basis child(Algorithm algo, const Basis& parent, int index) {
    return algo == Algorithm::A ? child_a(parent, index) : child_b(parent, index);
}

std::array<Basis, 6> subdivide_a(const Basis& parent) {
    if (!is_unimodular(parent)) throw InvariantViolation("subdivide_a: parent is not unimodular");
    std::array<Basis, 6> out;
    for (int i = 0; i < 6; ++i) out[i] = child_a(parent, i);
    return out;
}

std::array<Basis, 2> subdivide_b(const Basis& parent) {
    if (!is_unimodular(parent)) throw InvariantViolation("subdivide_b: parent is not unimodular");
    return {child_b(parent, 0), child_b(parent, 1)};
}

std::vector<Fraction> step_1d(std::span<const Fraction> level) {
    if (level.size() < 2 || level.front() != Fraction{0, 1} || level.back() != Fraction{1, 1}) {
        throw InvalidInput("step_1d: level must run from 0/1 to 1/1");
    }
    std::vector<Fraction> out;
    out.reserve(2 * level.size() - 1);
    out.push_back(level.front());
    for (std::size_t i = 1; i < level.size(); ++i) {
        const Fraction& l = level[i - 1];
        const Fraction& r = level[i];
        if (l.den <= 0 || r.den <= 0) throw InvalidInput("step_1d: non-positive denominator");
        // l < r  <=>  l.num * r.den < r.num * l.den
        if (static_cast<__int128>(l.num) * r.den >= static_cast<__int128>(r.num) * l.den) {
            throw InvalidInput("step_1d: level is not strictly increasing");
        }
        out.push_back({checked_add(l.num, r.num), checked_add(l.den, r.den)});
        out.push_back(r);
    }
    return out;
}

namespace {

using VertexSet = std::array<LatticeVector, 3>;

VertexSet sorted_vertices(const Triangle& t) {
    VertexSet s{t.v[0].vector(), t.v[1].vector(), t.v[2].vector()};
    std::sort(s.begin(), s.end());
    return s;
}

bool has_vertex(const Triangle& t, const RationalPoint& p) {
    return std::find(t.v.begin(), t.v.end(), p) != t.v.end();
}

bool is_child_of(const Triangle& child, const Triangle& parent) {
    Basis p{{parent.v[0].vector(), parent.v[1].vector(), parent.v[2].vector()}, 0, Algorithm::A};
    const VertexSet target = sorted_vertices(child);
    for (int i = 0; i < kChildrenA; ++i) {
        VertexSet s = child_a(p, i).g;
        std::sort(s.begin(), s.end());
        if (s == target) return true;
    }
    return false;
}

} // namespace

CodeA code_a(std::span<const Triangle> chain) {
    if (chain.empty()) throw InvalidInput("code_a: empty chain");
    for (std::size_t k = 1; k < chain.size(); ++k) {
        if (!is_child_of(chain[k], chain[k - 1])) {
            throw InvalidInput("code_a: link " + std::to_string(k) + " is not a parent/child pair");
        }
    }
    std::vector<int> reversed;
    std::size_t n = chain.size() - 1;
    while (n > 0) {
        const Triangle& tile = chain[n];
        const Triangle& parent = chain[n - 1];
        const RationalPoint* common = nullptr;
        for (const auto& p : tile.v) {
            if (has_vertex(parent, p)) common = &p;
        }
        std::size_t t = 1;
        if (common != nullptr) {
            while (t < n && has_vertex(chain[n - t - 1], *common)) ++t;
        }
        reversed.push_back(static_cast<int>(t));
        n -= t;
    }
    return CodeA{{reversed.rbegin(), reversed.rend()}};
}

void CodeATracker::push(int rule) {
    const bool corner = rule < 3;
    const bool extend = rule == 0 && !steps_.empty() && steps_.back().corner;
    if (extend) {
        ++code_.runs.back();
    } else {
        code_.runs.push_back(1);
    }
    steps_.push_back({corner, extend});
}

void CodeATracker::pop() {
    if (steps_.empty()) throw InvalidInput("CodeATracker::pop on empty tracker");
    if (steps_.back().extended) {
        --code_.runs.back();
    } else {
        code_.runs.pop_back();
    }
    steps_.pop_back();
}

} // namespace gfb
