#pragma once

// Streaming depth-first traversal of the subdivision tree. Nothing is
// materialized beyond the current root-to-node path, so memory is
// O(depth * branching) whatever the tile count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

#include "gfb/lattice.hpp"
#include "gfb/subdivision.hpp"

namespace gfb {

/// View of the node currently visited by `walk`. References are valid only
/// for the duration of the callback.
struct Node {
    const Basis& basis;
    const Basis* parent;     ///< nullptr for a depth-0 tile
    int root;                ///< which initial tile the node descends from
    int index;               ///< child index taken from the parent, -1 at depth 0
    std::span<const int> path;  ///< child indices from the root
    const CodeA* code_a;     ///< set for algorithm A
    const CodeB* code_b;     ///< set for algorithm B

    int depth() const { return basis.depth; }
};

/// Subtree root for partitioned traversals: a basis plus the child path that
/// leads to it from initial tile `root`.
struct SubtreeStart {
    Basis basis;
    int root = 0;
    std::vector<int> path;
};

struct NoLeave {
    void operator()(int) const noexcept {}
};

/// Depth-first walk from `start` down to `max_depth`, iterative with an
/// explicit frame stack. `enter(const Node&)` returns whether to descend into
/// the node's children; `leave(depth)` fires once the node and all of its
/// visited descendants are done.
template <class Enter, class Leave = NoLeave>
void walk_from(Algorithm algo, const SubtreeStart& start, int max_depth, Enter&& enter,
               Leave&& leave = {}) {
    struct Frame {
        Basis basis;
        int next;
    };
    const int fan = branching(algo);
    std::vector<Frame> frames;
    frames.reserve(static_cast<std::size_t>(std::max(0, max_depth - start.basis.depth)) + 2);
    std::vector<int> path = start.path;
    CodeATracker tracker;
    CodeB code_b;
    for (int i : path) {
        if (algo == Algorithm::A) tracker.push(i);
        else code_b.bits.push_back(b_bit(i));
    }
    const CodeA* ca = algo == Algorithm::A ? &tracker.code() : nullptr;
    const CodeB* cb = algo == Algorithm::B ? &code_b : nullptr;

    auto push_step = [&](int i) {
        path.push_back(i);
        if (algo == Algorithm::A) tracker.push(i);
        else code_b.bits.push_back(b_bit(i));
    };
    auto pop_step = [&] {
        path.pop_back();
        if (algo == Algorithm::A) tracker.pop();
        else code_b.bits.pop_back();
    };

    {
        const Node root_node{start.basis, nullptr, start.root, path.empty() ? -1 : path.back(),
                             path, ca, cb};
        if (enter(root_node) && start.basis.depth < max_depth) {
            frames.push_back({start.basis, 0});
        } else {
            leave(start.basis.depth);
            return;
        }
    }
    while (!frames.empty()) {
        Frame& top = frames.back();
        if (top.next == fan) {
            const int depth = top.basis.depth;
            frames.pop_back();
            leave(depth);
            if (!frames.empty()) pop_step();
            continue;
        }
        const int i = top.next++;
        Basis c = child(algo, top.basis, i);
        push_step(i);
        const Node node{c, &top.basis, start.root, i, path, ca, cb};
        if (enter(node) && c.depth < max_depth) {
            frames.push_back({c, 0});
        } else {
            leave(c.depth);
            pop_step();
        }
    }
}

/// Walks both initial tiles in order.
template <class Enter, class Leave = NoLeave>
void walk(Algorithm algo, int max_depth, Enter&& enter, Leave&& leave = {}) {
    const auto roots = initial_bases(algo);
    for (int r = 0; r < 2; ++r) {
        walk_from(algo, SubtreeStart{roots[r], r, {}}, max_depth, enter, leave);
    }
}

/// All nodes at `split_depth`, in traversal order.
std::vector<SubtreeStart> subtree_starts(Algorithm algo, int split_depth);

/// Runs fn(i) for i in [0, count) on `jobs` threads and returns results in
/// index order, so any merge over them is independent of the worker count.
template <class Fn>
auto parallel_map(std::size_t count, int jobs, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using R = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<R> out(count);
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto body = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

/// Number of tiles in Til_n: 2*6^n (A), 2^(n+1) (B), 2^n intervals (classical).
std::uint64_t tile_count(Algorithm algo, int depth);

/// Tile handed to `enumerate` visitors.
struct Tile {
    const Basis& basis;
    const CodeA* code_a;
    const CodeB* code_b;
};

struct EnumerationSummary {
    std::uint64_t tiles = 0;
    mpq_class total_area = 0;
};

/// Calls visitor(const Tile&) once per tile of Til_n and sums the areas exactly.
template <class Visitor>
EnumerationSummary enumerate(Algorithm algo, int depth, Visitor&& visitor) {
    if (depth < 0) throw InvalidInput("enumerate: negative depth");
    EnumerationSummary summary;
    std::vector<mpq_class> acc(static_cast<std::size_t>(depth) + 1);
    walk(
        algo, depth,
        [&](const Node& node) {
            if (node.depth() == depth) {
                visitor(Tile{node.basis, node.code_a, node.code_b});
                ++summary.tiles;
                const auto& g = node.basis.g;
                mpz_class den = mpz_class(g[0].x) * g[1].x;
                den *= g[2].x;
                den *= 2;
                acc[depth] += mpq_class(1, den);
            }
            return true;
        },
        [&](int d) {
            if (d == 0) {
                summary.total_area += acc[0];
            } else {
                acc[d - 1] += acc[d];
            }
            acc[d] = 0;
        });
    summary.total_area.canonicalize();
    return summary;
}

/// Chain of nested tiles containing a target point, one per depth 0..n.
struct DescentChain {
    RationalPoint theta;
    std::vector<Basis> bases;                 ///< bases[v] has depth v
    std::vector<int> child_index;             ///< child_index[v] leads from bases[v-1]; [0] is the root index
    std::vector<std::array<Int, 3>> coefficients;  ///< of theta's primitive vector, all >= 0
};

/// Point location: at every depth descend into the lowest-index child whose
/// closed triangle contains theta. Throws InvalidInput outside [0,1]^2.
DescentChain locate(Algorithm algo, const RationalPoint& theta, int depth);

struct VertexRecord {
    LatticeVector vertex;
    int first_depth = 0;
    friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

/// Every primitive (q, a1, a2) with q <= qmax that the algorithm produces,
/// with the smallest depth at which it is a basis vector. Sorted by vector.
std::vector<VertexRecord> vertices_up_to(Algorithm algo, Int qmax);

/// Smallest denominator any vertex created below `basis` can have.
Int min_new_denominator(Algorithm algo, const Basis& basis);

} // namespace gfb
