#pragma once

// Exact integer / rational primitives shared by every algorithm: primitive
// lattice vectors (x, y1, y2) with x the common denominator, their projections
// to the unit square, unimodular bases and the triangles they cut out.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gfb/errors.hpp"

namespace gfb {

using Int = std::int64_t;

enum class Algorithm { A, B, Classical };

std::string_view to_string(Algorithm algo);
/// Accepts "a", "b", "classical" (case-insensitive).
Algorithm parse_algorithm(std::string_view name);

Int checked_add(Int lhs, Int rhs);
Int checked_mul(Int lhs, Int rhs);

/// Integer vector (x, y1, y2). For the one-dimensional algorithm y2 stays 0.
struct LatticeVector {
    Int x = 1;
    Int y1 = 0;
    Int y2 = 0;

    /// Divides (x, y1, y2) by the gcd of its components.
    /// Throws InvalidInput on the zero vector or a negative component.
    static LatticeVector normalize(Int x, Int y1, Int y2 = 0);

    Int q() const noexcept { return x; }
    bool is_primitive() const noexcept;

    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

    /// Componentwise sum, overflow-checked. Not renormalized.
    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        return {checked_add(a.x, b.x), checked_add(a.y1, b.y1), checked_add(a.y2, b.y2)};
    }
    /// a + k*b, the k-fold mediant of b into a.
    static LatticeVector add_multiple(const LatticeVector& a, Int k, const LatticeVector& b);
};

struct LatticeVectorHash {
    std::size_t operator()(const LatticeVector& v) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(v.x) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(v.y1) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(v.y2) + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

/// Rational point (y1/x, y2/x) of the unit square, kept as its primitive vector.
class RationalPoint {
public:
    RationalPoint() = default;
    /// `v` must satisfy x >= 1, 0 <= y1, y2 <= x; it is normalized on entry.
    explicit RationalPoint(const LatticeVector& v);
    /// Point from explicit coordinates in [0,1]^2.
    static RationalPoint from_coords(const mpq_class& c1, const mpq_class& c2);
    /// Parses "p1/q1,p2/q2" (each coordinate may also be a bare integer).
    static RationalPoint parse(std::string_view text);

    const LatticeVector& vector() const noexcept { return v_; }
    Int q() const noexcept { return v_.x; }
    mpq_class coord(int i) const;

    /// "(a1,a2)/q"
    std::string label() const;
    /// "a1/q,a2/q" with each coordinate reduced.
    std::string to_string() const;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;

private:
    LatticeVector v_{};
};

/// a (+) b: projection of the componentwise sum of the primitive vectors.
/// When a and b extend to a lattice basis the sum is already primitive.
RationalPoint mediant(const RationalPoint& a, const RationalPoint& b);

/// Ordered triple of lattice vectors; order matters for algorithm B.
struct Basis {
    std::array<LatticeVector, 3> g{};
    int depth = 0;
    Algorithm algo = Algorithm::A;

    friend bool operator==(const Basis& a, const Basis& b) { return a.g == b.g; }
};

/// det of the rows (g1; g2; g3), exact.
Int det(const Basis& basis);
inline bool is_unimodular(const Basis& basis) {
    const Int d = det(basis);
    return d == 1 || d == -1;
}

/// Sign of det(u; v; w). With positive first coordinates this is the
/// orientation of the projected points u, v, w in the square.
int orientation(const LatticeVector& u, const LatticeVector& v, const LatticeVector& w);

/// True when z lies in the closed cone of `basis` (equivalently its projection
/// lies in the closed projected triangle).
bool in_closed_cone(const Basis& basis, const LatticeVector& z);

/// Coefficients (a1, a2, a3) of z in the basis: z = sum a_j g_j. Exact because |det| = 1.
std::array<Int, 3> coefficients(const Basis& basis, const LatticeVector& z);

struct Triangle {
    std::array<RationalPoint, 3> v{};
    int depth = 0;

    static Triangle from_basis(const Basis& basis);
};

/// 1 / (2 q(a) q(b) q(c)). Valid for triangles cut out by a unimodular basis.
mpq_class area(const Triangle& t);
/// Euclidean area of the projected points (shoelace), exact.
mpq_class shoelace_area(const Triangle& t);
/// Largest squared pairwise distance, exact. Throws InvalidInput on repeated vertices.
mpq_class squared_diameter(const Triangle& t);
double diameter(const Triangle& t);
/// Squared distance between two projected points, exact.
mpq_class squared_distance(const RationalPoint& a, const RationalPoint& b);

} // namespace gfb

template <>
struct std::hash<gfb::LatticeVector> : gfb::LatticeVectorHash {};
