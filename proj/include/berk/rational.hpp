#ifndef BERK_RATIONAL_HPP
#define BERK_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace berk {

// Exact rational, always canonical. Doubles as the exponent type
// (the additive value group is Q).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

std::string rat_string(const Rat& r);
std::optional<Rat> rat_parse(const std::string& text);

// lcm of exponent denominators; 1 for the empty set
inline mpz_class den_lcm(const mpz_class& a, const Rat& r) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), r.get_den().get_mpz_t());
    return out;
}

// exact square root of a rational if it is a perfect square
std::optional<Rat> rat_sqrt(const Rat& r);

// precision bound: finite exponent or +infinity
struct Prec {
    bool finite = false;
    Rat bound;

    static Prec inf() { return Prec{}; }
    static Prec at(Rat b) { return Prec{true, std::move(b)}; }

    bool operator==(const Prec& o) const {
        return finite == o.finite && (!finite || bound == o.bound);
    }
};

inline Prec prec_min(const Prec& a, const Prec& b) {
    if (!a.finite) return b;
    if (!b.finite) return a;
    return Prec::at(rat_min(a.bound, b.bound));
}

inline Prec prec_shift(const Prec& p, const Rat& e) {
    return p.finite ? Prec::at(p.bound + e) : p;
}

}  // namespace berk

#endif
