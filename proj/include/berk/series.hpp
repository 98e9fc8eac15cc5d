#ifndef BERK_SERIES_HPP
#define BERK_SERIES_HPP

#include <map>
#include <optional>
#include <string>

#include "berk/rational.hpp"

namespace berk {

// Default working precision: exponent span kept above the leading term
// by precision-consuming operations (div, lift_root).
inline const Rat kDefaultWorkingPrecision = Rat(48);

// Truncated Puiseux series over Q in the uniformizer t.
// terms_ maps exponent -> nonzero coefficient; every exponent < precision.
// Infinite precision + no terms = exact zero.
class Series {
  public:
    Series() = default;

    static Series zero() { return Series(); }
    static Series from_rat(const Rat& c);
    static Series monomial(const Rat& coeff, const Rat& exp);
    // t^e
    static Series t_pow(const Rat& e) { return monomial(Rat(1), e); }
    static Series zero_to(const Rat& prec);  // O(t^prec)

    const std::map<Rat, Rat>& terms() const { return terms_; }
    const Prec& precision() const { return prec_; }

    bool is_exact_zero() const { return terms_.empty() && !prec_.finite; }
    bool is_zero_to_precision() const { return terms_.empty() && prec_.finite; }
    bool has_terms() const { return !terms_.empty(); }
    bool is_exact() const { return !prec_.finite; }

    // least stored exponent; throws IndeterminateValuation when zero to
    // precision; +infinity (signalled via the optional) for exact zero
    std::optional<Rat> valuation_or_inf() const;  // nullopt = +infinity
    Rat val() const;                              // requires a term
    Rat leading_coeff() const;                    // coefficient at val()

    // reduction to the residue field Q; requires valuation >= 0
    Rat residue() const;

    Rat coeff_at(const Rat& e) const;

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const Rat& c) const;     // c * this, exact scalar
    Series shifted(const Rat& e) const;    // t^e * this
    Series truncated(const Rat& bound) const;  // drop terms >= bound, cap precision
    Series with_precision(Prec p) const;

    // division with explicit working-precision span; exact when the long
    // division terminates and both operands are exact
    static Series div(const Series& num, const Series& den,
                      const Rat& working_span = kDefaultWorkingPrecision);

    Series inverse(const Rat& working_span = kDefaultWorkingPrecision) const {
        return div(from_rat(Rat(1)), *this, working_span);
    }

    // equality as represented values (terms and precision both)
    bool operator==(const Series& o) const {
        return terms_ == o.terms_ && prec_ == o.prec_;
    }
    bool operator!=(const Series& o) const { return !(*this == o); }

    // lcm of denominators of all exponents (1 when none)
    mpz_class exponent_lattice_den() const;

    std::string str() const;

  private:
    std::map<Rat, Rat> terms_;
    Prec prec_ = Prec::inf();

    void normalize();
};

Series operator*(const Rat& c, const Series& s);

}  // namespace berk

#endif
