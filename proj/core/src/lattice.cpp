#include "gfb/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <cmath>
#include <limits>
#include <sstream>

namespace gfb {

namespace {

using Wide = __int128;

Int narrow(Wide value) {
    if (value > static_cast<Wide>(std::numeric_limits<Int>::max()) ||
        value < static_cast<Wide>(std::numeric_limits<Int>::min())) {
        throw CapacityError("integer overflow in lattice arithmetic");
    }
    return static_cast<Int>(value);
}

Wide det3(const LatticeVector& u, const LatticeVector& v, const LatticeVector& w) {
    const Wide a = u.x, b = u.y1, c = u.y2;
    const Wide d = v.x, e = v.y1, f = v.y2;
    const Wide g = w.x, h = w.y1, i = w.y2;
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

int sign(Wide v) { return (v > 0) - (v < 0); }

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw InvalidInput("empty rational");
    mpq_class value;
    if (value.set_str(s, 10) != 0) throw InvalidInput("malformed rational '" + s + "'");
    if (value.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
    value.canonicalize();
    return value;
}

} // namespace

std::string_view to_string(Algorithm algo) {
    switch (algo) {
    case Algorithm::A: return "a";
    case Algorithm::B: return "b";
    case Algorithm::Classical: return "classical";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "a") return Algorithm::A;
    if (lower == "b") return Algorithm::B;
    if (lower == "classical" || lower == "1d") return Algorithm::Classical;
    throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

Int checked_add(Int lhs, Int rhs) {
    Int out;
    if (__builtin_add_overflow(lhs, rhs, &out)) throw CapacityError("integer overflow in addition");
    return out;
}

Int checked_mul(Int lhs, Int rhs) {
    Int out;
    if (__builtin_mul_overflow(lhs, rhs, &out)) throw CapacityError("integer overflow in product");
    return out;
}

LatticeVector LatticeVector::normalize(Int x, Int y1, Int y2) {
    if (x < 0 || y1 < 0 || y2 < 0) throw InvalidInput("lattice vector with negative component");
    const Int g = std::gcd(std::gcd(x, y1), y2);
    if (g == 0) throw InvalidInput("zero lattice vector");
    return {x / g, y1 / g, y2 / g};
}

bool LatticeVector::is_primitive() const noexcept {
    return std::gcd(std::gcd(x, y1), y2) == 1;
}

LatticeVector LatticeVector::add_multiple(const LatticeVector& a, Int k, const LatticeVector& b) {
    return {checked_add(a.x, checked_mul(k, b.x)), checked_add(a.y1, checked_mul(k, b.y1)),
            checked_add(a.y2, checked_mul(k, b.y2))};
}

RationalPoint::RationalPoint(const LatticeVector& v) : v_(LatticeVector::normalize(v.x, v.y1, v.y2)) {
    if (v_.x < 1 || v_.y1 > v_.x || v_.y2 > v_.x) {
        throw InvalidInput("point outside the unit square");
    }
}

RationalPoint RationalPoint::from_coords(const mpq_class& c1, const mpq_class& c2) {
    if (c1 < 0 || c1 > 1 || c2 < 0 || c2 > 1) throw InvalidInput("point outside the unit square");
    mpz_class den = lcm(mpz_class(c1.get_den()), mpz_class(c2.get_den()));
    mpz_class n1 = c1.get_num() * (den / c1.get_den());
    mpz_class n2 = c2.get_num() * (den / c2.get_den());
    if (!den.fits_slong_p() || !n1.fits_slong_p() || !n2.fits_slong_p()) {
        throw CapacityError("point denominator exceeds 64 bits");
    }
    return RationalPoint(LatticeVector{den.get_si(), n1.get_si(), n2.get_si()});
}

RationalPoint RationalPoint::parse(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw InvalidInput("point must be given as p1/q1,p2/q2");
    }
    return from_coords(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

mpq_class RationalPoint::coord(int i) const {
    mpq_class out(mpz_class(i == 0 ? v_.y1 : v_.y2), mpz_class(v_.x));
    out.canonicalize();
    return out;
}

std::string RationalPoint::label() const {
    std::ostringstream os;
    os << '(' << v_.y1 << ',' << v_.y2 << ")/" << v_.x;
    return os.str();
}

std::string RationalPoint::to_string() const {
    return coord(0).get_str() + "," + coord(1).get_str();
}

RationalPoint mediant(const RationalPoint& a, const RationalPoint& b) {
    return RationalPoint(a.vector() + b.vector());
}

Int det(const Basis& basis) {
    return narrow(det3(basis.g[0], basis.g[1], basis.g[2]));
}

int orientation(const LatticeVector& u, const LatticeVector& v, const LatticeVector& w) {
    return sign(det3(u, v, w));
}

bool in_closed_cone(const Basis& basis, const LatticeVector& z) {
    const auto& g = basis.g;
    const int s = sign(det3(g[0], g[1], g[2]));
    if (s == 0) throw InvariantViolation("degenerate basis");
    return sign(det3(z, g[1], g[2])) * s >= 0 && sign(det3(g[0], z, g[2])) * s >= 0 &&
           sign(det3(g[0], g[1], z)) * s >= 0;
}

std::array<Int, 3> coefficients(const Basis& basis, const LatticeVector& z) {
    const auto& g = basis.g;
    const Wide d = det3(g[0], g[1], g[2]);
    if (d != 1 && d != -1) throw InvariantViolation("coefficients need a unimodular basis");
    return {narrow(det3(z, g[1], g[2]) * d), narrow(det3(g[0], z, g[2]) * d),
            narrow(det3(g[0], g[1], z) * d)};
}

Triangle Triangle::from_basis(const Basis& basis) {
    return Triangle{{RationalPoint(basis.g[0]), RationalPoint(basis.g[1]), RationalPoint(basis.g[2])},
                    basis.depth};
}

mpq_class area(const Triangle& t) {
    mpz_class den = 2;
    for (const auto& p : t.v) den *= mpz_class(p.q());
    return mpq_class(mpz_class(1), den);
}

mpq_class shoelace_area(const Triangle& t) {
    const mpq_class x0 = t.v[0].coord(0), y0 = t.v[0].coord(1);
    const mpq_class x1 = t.v[1].coord(0), y1 = t.v[1].coord(1);
    const mpq_class x2 = t.v[2].coord(0), y2 = t.v[2].coord(1);
    mpq_class twice = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0);
    return abs(twice) / 2;
}

mpq_class squared_distance(const RationalPoint& a, const RationalPoint& b) {
    const auto& u = a.vector();
    const auto& v = b.vector();
    const mpz_class dx = mpz_class(u.y1) * v.x - mpz_class(v.y1) * u.x;
    const mpz_class dy = mpz_class(u.y2) * v.x - mpz_class(v.y2) * u.x;
    const mpz_class den = mpz_class(u.x) * v.x;
    mpq_class out(dx * dx + dy * dy, den * den);
    out.canonicalize();
    return out;
}

mpq_class squared_diameter(const Triangle& t) {
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[0] == t.v[2]) {
        throw InvalidInput("diameter of a triangle with repeated vertices");
    }
    mpq_class best = squared_distance(t.v[0], t.v[1]);
    best = std::max(best, squared_distance(t.v[1], t.v[2]));
    best = std::max(best, squared_distance(t.v[0], t.v[2]));
    return best;
}

double diameter(const Triangle& t) {
    return std::sqrt(squared_diameter(t).get_d());
}

} // namespace gfb
