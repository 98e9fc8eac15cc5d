#ifndef BERK_POLY_HPP
#define BERK_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berk/series.hpp"

namespace berk {

// Polynomial over Q (residue field side).
struct QPoly {
    std::vector<Rat> c;  // index = degree

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    Rat eval(const Rat& x) const;
    QPoly derivative() const;
    QPoly monic() const;
    std::string str(const std::string& var = "z") const;

    bool operator==(const QPoly& o) const { return c == o.c; }
};

QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
// euclidean division; returns (quotient, remainder)
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
QPoly qpoly_gcd(QPoly a, QPoly b);  // monic gcd, 1 if coprime

// rational roots with multiplicities; exact for deg <= 2, bounded divisor
// search for higher degree
std::vector<std::pair<Rat, int>> qpoly_rational_roots(const QPoly& p);

// Polynomial with Puiseux-series coefficients.
struct SeriesPoly {
    std::vector<Series> c;  // index = degree

    SeriesPoly() = default;
    explicit SeriesPoly(std::vector<Series> coeffs) : c(std::move(coeffs)) { trim(); }
    static SeriesPoly from_q(const QPoly& q);

    void trim();  // drop trailing exact zeros
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    const Series& coeff(int i) const;
    Series eval(const Series& x) const;
    SeriesPoly derivative() const;

    SeriesPoly operator+(const SeriesPoly& o) const;
    SeriesPoly operator-(const SeriesPoly& o) const;
    SeriesPoly operator*(const SeriesPoly& o) const;
    SeriesPoly scaled(const Series& s) const;

    // P(center + scale * z), expanded exactly
    SeriesPoly compose_affine(const Series& center, const Series& scale) const;
    // z^deg * P(1/z)
    SeriesPoly reversed() const;
    // t^e * P
    SeriesPoly shifted(const Rat& e) const;

    // min over coefficient valuations; throws IndeterminateCoefficient when a
    // zero-to-precision coefficient could fall at or below the candidate min,
    // nullopt when the polynomial is exactly zero
    std::optional<Rat> min_valuation() const;

    // coefficient-wise residue; requires min_valuation() == 0 territory
    QPoly reduce() const;

    mpz_class exponent_lattice_den() const;
    std::string str(const std::string& var = "z") const;
};

// Newton polygon of P: lower hull segments of (i, v(c_i)).
struct PolygonSegment {
    Rat root_valuation;  // negated slope
    int length;          // number of roots
    int left_index;      // hull vertex indices
    int right_index;
};

// Root valuations with multiplicity (roots at z=0 from an exactly-zero
// constant tail are excluded). Throws IndeterminateGeometry when a
// zero-to-precision coefficient could change the hull.
std::vector<PolygonSegment> newton_polygon(const SeriesPoly& P);

std::map<Rat, int> root_valuations(const SeriesPoly& P);

// Lift the root with the given polygon slope by Newton iteration, to the
// given precision bound on the root. The canonical residue root is the
// largest rational one; residue_hint selects a specific one.
Series lift_root(const SeriesPoly& P, const Rat& slope, const Rat& target_precision,
                 std::optional<Rat> residue_hint = std::nullopt);

// Nonzero residue roots (with multiplicity) of the slope's rescaled
// reduction; used by lift_root and the classifier.
std::vector<std::pair<Rat, int>> slope_residue_roots(const SeriesPoly& P, const Rat& slope);

}  // namespace berk

#endif
