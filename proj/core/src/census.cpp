#include "gfb/census.hpp"

#include <algorithm>
#include <unordered_map>

#include "gfb/tiling.hpp"

namespace gfb {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

void require_two_dimensional(Algorithm algo, const char* what) {
    if (algo == Algorithm::Classical) {
        throw InvalidInput(std::string(what) + " needs a two-dimensional algorithm");
    }
}

} // namespace

std::optional<int> DegreeTable::find(const LatticeVector& v) const {
    auto it = degree.find(v);
    if (it == degree.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> TriangulationGraph::index_of(const LatticeVector& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

int census_capacity(Algorithm algo) {
    switch (algo) {
    case Algorithm::A: return 8;
    case Algorithm::B: return 22;
    case Algorithm::Classical: break;
    }
    return -1;
}

TriangulationGraph build_graph(Algorithm algo, int depth) {
    require_two_dimensional(algo, "build_graph");
    if (depth < 0) throw InvalidInput("build_graph: negative depth");
    if (depth > census_capacity(algo)) {
        throw CapacityError("build_graph: depth " + std::to_string(depth) + " exceeds capacity " +
                            std::to_string(census_capacity(algo)) + " for algorithm " +
                            std::string(to_string(algo)));
    }
    std::unordered_map<LatticeVector, std::uint32_t, LatticeVectorHash> ids;
    std::vector<LatticeVector> by_id;
    std::vector<int> first;
    std::vector<std::uint64_t> edge_keys;
    edge_keys.reserve(3 * tile_count(algo, depth));
    std::uint64_t faces = 0;

    auto id_of = [&](const LatticeVector& v, int d) {
        auto [it, inserted] = ids.try_emplace(v, static_cast<std::uint32_t>(by_id.size()));
        if (inserted) {
            by_id.push_back(v);
            first.push_back(d);
        }
        return it->second;
    };
    walk(algo, depth, [&](const Node& node) {
        std::array<std::uint32_t, 3> id{};
        for (int j = 0; j < 3; ++j) id[j] = id_of(node.basis.g[j], node.depth());
        if (node.depth() == depth) {
            ++faces;
            for (int j = 0; j < 3; ++j) {
                std::uint64_t a = id[j], b = id[(j + 1) % 3];
                if (a > b) std::swap(a, b);
                edge_keys.push_back(a << 32 | b);
            }
        }
        return true;
    });
    std::sort(edge_keys.begin(), edge_keys.end());
    edge_keys.erase(std::unique(edge_keys.begin(), edge_keys.end()), edge_keys.end());

    std::vector<int> deg_by_id(by_id.size(), 0);
    for (auto key : edge_keys) {
        ++deg_by_id[key >> 32];
        ++deg_by_id[key & 0xFFFFFFFFULL];
    }

    TriangulationGraph g;
    g.algo = algo;
    g.depth = depth;
    g.faces = faces;
    g.edges = edge_keys.size();
    std::vector<std::uint32_t> order(by_id.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return by_id[a] < by_id[b]; });
    g.vertices.reserve(order.size());
    for (auto i : order) {
        g.vertices.push_back(by_id[i]);
        g.first_depth.push_back(first[i]);
        g.degree.push_back(deg_by_id[i]);
    }
    return g;
}

Census census(const TriangulationGraph& graph) {
    Census c;
    c.depth = graph.depth;
    c.f = graph.faces;
    c.r = graph.edges;
    c.v = graph.vertices.size();
    for (int d : graph.degree) ++c.degree_histogram[d];
    return c;
}

Census census(Algorithm algo, int depth) { return census(build_graph(algo, depth)); }

Census census_formula(Algorithm algo, int depth) {
    require_two_dimensional(algo, "census_formula");
    if (depth < 0) throw InvalidInput("census_formula: negative depth");
    Census c;
    c.depth = depth;
    const int n = depth;
    if (algo == Algorithm::A) {
        const std::uint64_t six = ipow(6, n), two = ipow(2, n);
        c.f = 2 * six;
        c.r = two * (ipow(3, n + 1) + 2);
        c.v = six + 2 * two + 1;
        // v^[8] read with 2^(n+1), matching the recursion it is stated with.
        const std::map<int, std::uint64_t> hist{{2, 2},
                                                {3, (2 * six + 8) / 5},
                                                {5, 4 * two - 4},
                                                {8, (6 * six + 14) / 10 - 2 * two}};
        for (auto [d, count] : hist) {
            if (count != 0) c.degree_histogram[d] = count;
        }
    } else {
        const int k = n / 2;
        const std::uint64_t p = ipow(2, k);
        c.f = ipow(2, n + 1);
        if (n % 2 == 0) {
            c.r = 3 * p * p + 2 * p;
            c.v = (p + 1) * (p + 1);
        } else {
            c.r = 6 * p * p + 2 * p;
            c.v = (p + 1) * (p + 1) + p * p;
        }
    }
    return c;
}

DegreeTable stable_degrees(const TriangulationGraph& graph) {
    if (graph.depth < 1) throw InvalidInput("stable_degrees: depth must be >= 1");
    DegreeTable table{graph.algo, {}};
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        if (graph.algo == Algorithm::B && graph.first_depth[i] > graph.depth - 1) continue;
        table.degree.emplace_hint(table.degree.end(), graph.vertices[i], graph.degree[i]);
    }
    return table;
}

DegreeTable stable_degrees(Algorithm algo, int depth) {
    if (depth < 1) throw InvalidInput("stable_degrees: depth must be >= 1");
    return stable_degrees(build_graph(algo, depth));
}

DegreeTable harvested_degrees(Algorithm algo, Int qmax) {
    require_two_dimensional(algo, "harvested_degrees");
    if (qmax < 1) throw InvalidInput("harvested_degrees: qmax must be >= 1");
    std::unordered_map<LatticeVector, std::vector<LatticeVector>, LatticeVectorHash> nbrs;
    auto record = [&](const Basis& b, int j) {
        const LatticeVector& v = b.g[j];
        if (v.x > qmax) return;
        auto& list = nbrs[v];
        list.push_back(b.g[(j + 1) % 3]);
        list.push_back(b.g[(j + 2) % 3]);
    };
    const int depth_guard = static_cast<int>(std::min<Int>(4 * qmax + 8, 1 << 20));
    walk(algo, depth_guard, [&](const Node& node) {
        const Basis& b = node.basis;
        const int d = node.depth();
        if (d == depth_guard) throw InvariantViolation("harvested_degrees: pruning did not terminate");
        bool fresh_small = false;
        if (algo == Algorithm::A) {
            // New vertices at this step: all three at depth 0 or after a
            // central rule, the two non-kept ones after a corner rule.
            for (int j = 0; j < 3; ++j) {
                const bool is_new = d == 0 || node.index >= 3 || j > 0;
                if (is_new) record(b, j);
            }
        } else {
            if (d == 1) {
                record(b, 1);
                record(b, 2);
            } else if (d >= 2) {
                record(b, 1);  // the parent's newly created vertex
            }
            fresh_small = d == 0 || b.g[0].x <= qmax;
        }
        return fresh_small || min_new_denominator(algo, b) <= qmax;
    });
    DegreeTable table{algo, {}};
    for (auto& [v, list] : nbrs) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        table.degree.emplace(v, static_cast<int>(list.size()));
    }
    return table;
}

bool allowed_stable_degree(Algorithm algo, int degree) {
    if (algo == Algorithm::A) return degree == 2 || degree == 3 || degree == 5 || degree == 8;
    if (algo == Algorithm::B) return degree == 3 || degree == 5 || degree == 8;
    return degree == 1 || degree == 2;
}

} // namespace gfb
