#include "berk/series.hpp"

#include <sstream>

#include "berk/errors.hpp"

namespace berk {

std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

std::optional<Rat> rat_parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    Rat r;
    if (r.set_str(text, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

void Series::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        bool drop = (it->second == 0) || (prec_.finite && it->first >= prec_.bound);
        it = drop ? terms_.erase(it) : std::next(it);
    }
}

Series Series::from_rat(const Rat& c) {
    Series s;
    if (c != 0) s.terms_[Rat(0)] = c;
    return s;
}

Series Series::monomial(const Rat& coeff, const Rat& exp) {
    Series s;
    if (coeff != 0) s.terms_[exp] = coeff;
    return s;
}

Series Series::zero_to(const Rat& prec) {
    Series s;
    s.prec_ = Prec::at(prec);
    return s;
}

std::optional<Rat> Series::valuation_or_inf() const {
    if (!terms_.empty()) return terms_.begin()->first;
    if (!prec_.finite) return std::nullopt;  // exact zero: +infinity
    throw IndeterminateValuation();
}

Rat Series::val() const {
    if (terms_.empty()) throw IndeterminateValuation();
    return terms_.begin()->first;
}

Rat Series::leading_coeff() const {
    if (terms_.empty()) throw IndeterminateValuation();
    return terms_.begin()->second;
}

Rat Series::residue() const {
    if (is_exact_zero()) return Rat(0);
    if (terms_.empty()) {
        // zero to precision: residue determined iff the bound is positive
        if (prec_.bound > 0) return Rat(0);
        throw IndeterminateValuation();
    }
    if (val() < 0) throw NotIntegral();
    if (prec_.finite && prec_.bound <= 0) throw IndeterminateValuation();
    auto it = terms_.find(Rat(0));
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Series::coeff_at(const Rat& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Series Series::operator+(const Series& o) const {
    Series out;
    out.prec_ = prec_min(prec_, o.prec_);
    out.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = out.terms_.emplace(e, c);
        if (!inserted) it->second += c;
    }
    out.normalize();
    return out;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    if (is_exact_zero() || o.is_exact_zero()) return zero();
    Series out;
    // error term bound: x*O(t^py), y*O(t^px), O(t^{px+py})
    Prec p = Prec::inf();
    if (o.prec_.finite && has_terms()) p = prec_min(p, Prec::at(val() + o.prec_.bound));
    if (prec_.finite && o.has_terms()) p = prec_min(p, Prec::at(o.val() + prec_.bound));
    if (prec_.finite && o.prec_.finite) p = prec_min(p, Prec::at(prec_.bound + o.prec_.bound));
    out.prec_ = p;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Rat e = e1 + e2;
            if (p.finite && e >= p.bound) continue;
            auto [it, inserted] = out.terms_.emplace(e, c1 * c2);
            if (!inserted) it->second += c1 * c2;
        }
    out.normalize();
    return out;
}

Series Series::scaled(const Rat& c) const {
    if (c == 0) {
        // scalar zero still erases the known part; keep nothing, exact zero
        return zero();
    }
    Series out = *this;
    for (auto& [e, k] : out.terms_) k *= c;
    return out;
}

Series operator*(const Rat& c, const Series& s) { return s.scaled(c); }

Series Series::shifted(const Rat& e) const {
    Series out;
    out.prec_ = prec_shift(prec_, e);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k + e, c);
    return out;
}

Series Series::truncated(const Rat& bound) const {
    Series out = *this;
    out.prec_ = prec_min(out.prec_, Prec::at(bound));
    out.normalize();
    return out;
}

Series Series::with_precision(Prec p) const {
    Series out = *this;
    out.prec_ = std::move(p);
    out.normalize();
    return out;
}

Series Series::div(const Series& num, const Series& den, const Rat& working_span) {
    if (den.is_exact_zero()) throw DivisionByZero();
    if (den.is_zero_to_precision()) throw IndeterminateZero();
    const Rat vden = den.val();

    // operand-precision bound on the quotient
    Prec opb = Prec::inf();
    if (num.precision().finite) opb = prec_min(opb, Prec::at(num.precision().bound - vden));
    if (den.precision().finite && num.has_terms())
        opb = prec_min(opb, Prec::at(den.precision().bound - 2 * vden + num.val()));

    if (num.is_exact_zero()) return zero();
    if (!num.has_terms()) {
        // zero to precision over a unit-times-t^v: O(t^{pnum - vden})
        return zero_to(num.precision().bound - vden);
    }

    const Rat target = [&] {
        Rat w = num.val() - vden + working_span;
        return opb.finite ? rat_min(w, opb.bound) : w;
    }();

    // long division in increasing exponent order on the known parts
    Series r = num.with_precision(Prec::inf());
    Series d = den.with_precision(Prec::inf());
    Series q;
    bool exact = false;
    while (true) {
        if (!r.has_terms()) {
            exact = true;
            break;
        }
        Rat qe = r.val() - vden;
        if (qe >= target) break;
        Series m = monomial(r.leading_coeff() / d.leading_coeff(), qe);
        q += m;
        r -= m * d;
    }
    if (exact) {
        q = q.with_precision(opb);
    } else {
        q = q.with_precision(Prec::at(target));
    }
    return q;
}

mpz_class Series::exponent_lattice_den() const {
    mpz_class l = 1;
    for (const auto& [e, c] : terms_) l = den_lcm(l, e);
    return l;
}

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << rat_string(a);
        } else {
            if (a != 1) os << rat_string(a) << "*";
            os << "t";
            if (e != 1) {
                if (e.get_den() == 1 && e > 0)
                    os << "^" << rat_string(e);
                else
                    os << "^(" << rat_string(e) << ")";
            }
        }
    }
    if (prec_.finite) {
        if (!first) os << " + ";
        os << "O(t^";
        if (prec_.bound.get_den() == 1 && prec_.bound >= 0)
            os << rat_string(prec_.bound);
        else
            os << "(" << rat_string(prec_.bound) << ")";
        os << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

}  // namespace berk
