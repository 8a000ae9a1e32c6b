#pragma once

// Subdivision rules: algorithm A (six children, order-independent), algorithm B
// (two ordered children, operations "1" and "0") and the classical
// one-dimensional mediant step, plus the codes attached to tiles.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gfb/lattice.hpp"

namespace gfb {

/// Run-length code [t_1, ..., t_r] of an algorithm-A tile; sum equals depth.
struct CodeA {
    std::vector<int> runs;

    int depth() const;
    std::size_t length() const { return runs.size(); }
    std::string to_string() const;
    friend bool operator==(const CodeA&, const CodeA&) = default;
};

/// Operation string c_1 ... c_n of an algorithm-B tile.
struct CodeB {
    std::vector<std::uint8_t> bits;

    int depth() const { return static_cast<int>(bits.size()); }
    int weight() const;
    std::string to_string() const;
    friend bool operator==(const CodeB&, const CodeB&) = default;
};

inline constexpr int kChildrenA = 6;
inline constexpr int kChildrenB = 2;

std::array<Basis, 2> initial_a();
std::array<Basis, 2> initial_b();
std::array<Basis, 2> initial_bases(Algorithm algo);
int branching(Algorithm algo);

/// The six children in rule order 1..6. Throws InvariantViolation on a
/// non-unimodular parent.
std::array<Basis, 6> subdivide_a(const Basis& parent);
/// (child via operation "1", child via operation "0").
std::array<Basis, 2> subdivide_b(const Basis& parent);

/// Single child without the unimodularity check; `index` follows the order
/// above (A: rule-1, B: 0 is operation "1", 1 is operation "0").
Basis child_a(const Basis& parent, int index);
Basis child_b(const Basis& parent, int index);
Basis child(Algorithm algo, const Basis& parent, int index);

/// B child index -> code bit (index 0 is operation "1").
inline std::uint8_t b_bit(int index) { return index == 0 ? 1 : 0; }

/// Fraction p/q of the one-dimensional Brocot sequence.
struct Fraction {
    Int num = 0;
    Int den = 1;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// F_n -> F_{n+1}: inserts the mediant between every pair of neighbours.
/// Throws InvalidInput unless the input is strictly increasing from 0/1 to 1/1.
std::vector<Fraction> step_1d(std::span<const Fraction> level);

/// Code of the last tile of a nested chain Delta_0 > Delta_1 > ... > Delta_n,
/// computed from shared vertices. Throws InvalidInput if a link is not a
/// parent/child pair of algorithm A.
CodeA code_a(std::span<const Triangle> chain);

/// Incremental form of code_a used during descent; push/pop mirror DFS.
class CodeATracker {
public:
    void push(int rule);
    void pop();
    const CodeA& code() const { return code_; }
    int depth() const { return static_cast<int>(steps_.size()); }

private:
    struct Step {
        bool corner;
        bool extended;
    };
    CodeA code_;
    std::vector<Step> steps_;
};

} // namespace gfb
