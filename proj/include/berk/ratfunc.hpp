#ifndef BERK_RATFUNC_HPP
#define BERK_RATFUNC_HPP

#include <optional>
#include <string>
#include <vector>

#include "berk/poly.hpp"
#include "berk/series.hpp"

namespace berk {

// The normalized cubic phi = (a3 z^3 + a2 z^2) / (b2 z^2 + b1 z + b0),
// coefficients in O_K, phi(1) = 1, Wr_phi(1) = 0.
struct CubicCoefficients {
    Series a3, a2, b2, b1, b0;

    SeriesPoly numerator() const;    // f = a3 z^3 + a2 z^2
    SeriesPoly denominator() const;  // g = b2 z^2 + b1 z + b0

    // resultant of f/z^2 and g: b2 a2^2 - a3 a2 b1 + a3^2 b0
    Series common_root_resultant() const;
};

struct CriticalData {
    Series alpha, beta, gamma;
};

struct ValidationIssue {
    std::string check;
    std::string detail;
    bool indeterminate = false;  // true: unverifiable at working precision
};

struct ValidationReport {
    std::vector<ValidationIssue> violations;
    std::vector<std::string> notes;  // checks that passed only up to precision
    bool valid() const { return violations.empty(); }
};

ValidationReport validate(const CubicCoefficients& c);

// alpha solving (1-alpha)(1-beta)(3-2gamma) = (1-gamma)(2-alpha-beta)
Series solve_alpha(const Series& beta, const Series& gamma,
                   const Rat& working_span = kDefaultWorkingPrecision);

// canonical coefficients from critical data, scaled by a power of t so the
// minimum valuation is 0
CubicCoefficients from_critical_data(const CriticalData& d);

// (Wr, psi): Wr = f'g - f g' and psi = a3 b2 z^2 + (2 a3 b1 + a3 b2) z - 2 a2 b0,
// with Wr = z(z-1) psi
std::pair<SeriesPoly, SeriesPoly> wronskian_psi(const CubicCoefficients& c);

struct ReducedMap {
    QPoly numerator;    // coprime
    QPoly denominator;
    int degree = 0;     // max of the two degrees
    // set when degree == 0: the constant value, or infinity
    std::optional<Rat> constant_value;
    bool constant_infinity = false;
};

ReducedMap reduce_map(const SeriesPoly& F, const SeriesPoly& G);

// numerator/denominator of z -> phi(center + scale*z) - post_shift
std::pair<SeriesPoly, SeriesPoly> conjugate_affine(const SeriesPoly& F, const SeriesPoly& G,
                                                   const Series& center, const Series& scale,
                                                   const std::optional<Series>& post_shift = {});

// value of phi at a classical point; nullopt encodes infinity
std::optional<Series> evaluate(const CubicCoefficients& c, const std::optional<Series>& z,
                               const Rat& working_span = kDefaultWorkingPrecision);

}  // namespace berk

#endif
