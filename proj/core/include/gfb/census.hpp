#pragma once

// The triangulation graph T_v: vertices are the basis vectors of step v and
// edges join vectors that share a step-v basis. Only the step-v triangulation
// is used, not the union over all steps.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gfb/lattice.hpp"

namespace gfb {

struct Census {
    int depth = 0;
    std::uint64_t f = 0;  ///< faces
    std::uint64_t r = 0;  ///< edges
    std::uint64_t v = 0;  ///< vertices
    std::map<int, std::uint64_t> degree_histogram;

    friend bool operator==(const Census&, const Census&) = default;
};

struct DegreeTable {
    Algorithm algo = Algorithm::A;
    std::map<LatticeVector, int> degree;

    std::optional<int> find(const LatticeVector& v) const;
};

/// Explicit T_v with first-appearance depths.
struct TriangulationGraph {
    Algorithm algo = Algorithm::A;
    int depth = 0;
    std::uint64_t faces = 0;
    std::vector<LatticeVector> vertices;  ///< sorted
    std::vector<int> first_depth;         ///< parallel to vertices
    std::vector<int> degree;              ///< parallel to vertices
    std::uint64_t edges = 0;

    std::optional<std::size_t> index_of(const LatticeVector& v) const;
};

/// Largest depth build_graph accepts for each algorithm.
int census_capacity(Algorithm algo);

/// Throws CapacityError beyond census_capacity.
TriangulationGraph build_graph(Algorithm algo, int depth);

Census census(Algorithm algo, int depth);
Census census(const TriangulationGraph& graph);

/// Counts predicted by the closed forms (f, r, v and, for A, the degree
/// histogram; B leaves the histogram empty).
Census census_formula(Algorithm algo, int depth);

/// Degrees that no longer change: A -> every vertex of T_v, B -> vertices
/// already present at step v-1. Requires depth >= 1.
DegreeTable stable_degrees(Algorithm algo, int depth);
DegreeTable stable_degrees(const TriangulationGraph& graph);

/// Stable degree of every vertex with q <= qmax, gathered by a pruned descent
/// instead of whole triangulations: A reads each vertex's degree at the step it
/// appears, B one step later.
DegreeTable harvested_degrees(Algorithm algo, Int qmax);

/// Allowed stable degrees: {2,3,5,8} for A, {3,5,8} for B.
bool allowed_stable_degree(Algorithm algo, int degree);

} // namespace gfb
