#include "gfb/tiling.hpp"

#include <map>
#include <unordered_map>

namespace gfb {

std::vector<SubtreeStart> subtree_starts(Algorithm algo, int split_depth) {
    std::vector<SubtreeStart> out;
    walk(algo, split_depth, [&](const Node& node) {
        if (node.depth() == split_depth) {
            out.push_back({node.basis, node.root, {node.path.begin(), node.path.end()}});
        }
        return true;
    });
    return out;
}

std::uint64_t tile_count(Algorithm algo, int depth) {
    if (depth < 0) throw InvalidInput("tile_count: negative depth");
    std::uint64_t n = algo == Algorithm::Classical ? 1 : 2;
    const std::uint64_t fan = algo == Algorithm::A ? 6 : 2;
    for (int i = 0; i < depth; ++i) {
        if (n > UINT64_MAX / fan) throw CapacityError("tile count exceeds 64 bits");
        n *= fan;
    }
    return n;
}

DescentChain locate(Algorithm algo, const RationalPoint& theta, int depth) {
    if (algo == Algorithm::Classical) throw InvalidInput("locate needs a two-dimensional algorithm");
    if (depth < 0) throw InvalidInput("locate: negative depth");
    const LatticeVector& z = theta.vector();
    if (z.x < 1 || z.y1 < 0 || z.y2 < 0 || z.y1 > z.x || z.y2 > z.x) {
        throw InvalidInput("locate: point outside the unit square");
    }
    DescentChain chain{theta, {}, {}, {}};
    const auto roots = initial_bases(algo);
    int root = -1;
    for (int r = 0; r < 2 && root < 0; ++r) {
        if (in_closed_cone(roots[r], z)) root = r;
    }
    if (root < 0) throw InvalidInput("locate: point outside the unit square");
    Basis current = roots[root];
    chain.bases.push_back(current);
    chain.child_index.push_back(root);
    chain.coefficients.push_back(coefficients(current, z));
    const int fan = branching(algo);
    for (int v = 1; v <= depth; ++v) {
        bool found = false;
        for (int i = 0; i < fan && !found; ++i) {
            Basis c = child(algo, current, i);
            if (in_closed_cone(c, z)) {
                current = c;
                chain.bases.push_back(c);
                chain.child_index.push_back(i);
                chain.coefficients.push_back(coefficients(c, z));
                found = true;
            }
        }
        if (!found) throw InvariantViolation("locate: children do not cover their parent");
    }
    return chain;
}

Int min_new_denominator(Algorithm algo, const Basis& basis) {
    const auto& g = basis.g;
    if (algo == Algorithm::B) return checked_add(g[1].x, g[2].x);
    std::array<Int, 3> q{g[0].x, g[1].x, g[2].x};
    std::sort(q.begin(), q.end());
    return checked_add(q[0], q[1]);
}

std::vector<VertexRecord> vertices_up_to(Algorithm algo, Int qmax) {
    if (algo == Algorithm::Classical) throw InvalidInput("vertices_up_to needs a two-dimensional algorithm");
    if (qmax < 1) throw InvalidInput("vertices_up_to: qmax must be >= 1");
    std::unordered_map<LatticeVector, int, LatticeVectorHash> first;
    // Past this depth every subtree is pruned; it only guards against a bug.
    const int depth_guard = static_cast<int>(std::min<Int>(4 * qmax + 8, 1 << 20));
    walk(algo, depth_guard, [&](const Node& node) {
        for (const auto& v : node.basis.g) {
            if (v.x > qmax) continue;
            auto [it, inserted] = first.try_emplace(v, node.depth());
            if (!inserted && node.depth() < it->second) it->second = node.depth();
        }
        if (node.depth() == depth_guard) throw InvariantViolation("vertices_up_to: pruning did not terminate");
        return min_new_denominator(algo, node.basis) <= qmax;
    });
    std::vector<VertexRecord> out;
    out.reserve(first.size());
    for (const auto& [v, d] : first) out.push_back({v, d});
    std::sort(out.begin(), out.end(),
              [](const VertexRecord& a, const VertexRecord& b) { return a.vertex < b.vertex; });
    return out;
}

} // namespace gfb
