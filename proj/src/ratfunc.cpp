#include "berk/ratfunc.hpp"

#include "berk/errors.hpp"

namespace berk {

SeriesPoly CubicCoefficients::numerator() const {
    return SeriesPoly({Series::zero(), Series::zero(), a2, a3});
}

SeriesPoly CubicCoefficients::denominator() const {
    return SeriesPoly({b0, b1, b2});
}

Series CubicCoefficients::common_root_resultant() const {
    return b2 * a2 * a2 - a3 * a2 * b1 + a3 * a3 * b0;
}

namespace {

std::optional<Rat> val_of(const Series& s) {
    if (s.has_terms()) return s.val();
    return std::nullopt;  // exact zero or zero-to-precision
}

void check_nonzero(ValidationReport& rep, const Series& s, const std::string& name) {
    if (s.is_exact_zero()) rep.violations.push_back({name + " != 0", name + " is exactly zero"});
    else if (s.is_zero_to_precision())
        rep.violations.push_back({name + " != 0", name + " is zero to precision", true});
}

void check_zero(ValidationReport& rep, const Series& s, const std::string& name) {
    if (s.is_exact_zero()) return;
    if (s.has_terms()) {
        rep.violations.push_back({name, "residual " + s.str()});
    } else {
        rep.notes.push_back(name + " holds to O(t^" + rat_string(s.precision().bound) + ")");
    }
}

}  // namespace

ValidationReport validate(const CubicCoefficients& c) {
    ValidationReport rep;
    check_nonzero(rep, c.a3, "a3");
    check_nonzero(rep, c.b2, "b2");
    check_nonzero(rep, c.b0, "b0");  // g(0) != 0, else f and g share the root 0

    const Series* all[5] = {&c.a3, &c.a2, &c.b2, &c.b1, &c.b0};
    const char* names[5] = {"a3", "a2", "b2", "b1", "b0"};
    std::optional<Rat> minval;
    for (int i = 0; i < 5; ++i) {
        auto v = val_of(*all[i]);
        if (v) {
            if (*v < 0)
                rep.violations.push_back({std::string(names[i]) + " in O_K",
                                          "valuation " + rat_string(*v) + " < 0"});
            if (!minval || *v < *minval) minval = v;
        }
    }
    if (minval && *minval > 0)
        rep.violations.push_back({"some |coefficient| = 1",
                                  "minimum valuation " + rat_string(*minval) + " > 0"});

    check_zero(rep, c.a3 + c.a2 - c.b2 - c.b1 - c.b0, "heart: a3+a2 = b2+b1+b0");
    check_zero(rep, Rat(3) * c.a3 + Rat(2) * c.a2 - Rat(2) * c.b2 - c.b1,
               "club: 3a3+2a2-2b2-b1 = 0");

    Series res = c.common_root_resultant();
    if (res.is_exact_zero())
        rep.violations.push_back({"f, g share no root", "resultant(f/z^2, g) = 0"});
    else if (res.is_zero_to_precision())
        rep.violations.push_back({"f, g share no root",
                                  "resultant zero to precision", true});
    return rep;
}

Series solve_alpha(const Series& beta, const Series& gamma, const Rat& working_span) {
    Series one = Series::from_rat(Rat(1));
    Series two = Series::from_rat(Rat(2));
    Series three = Series::from_rat(Rat(3));
    Series lin = (one - gamma) - (one - beta) * (three - Rat(2) * gamma);
    Series rhs = (one - gamma) * (two - beta) - (one - beta) * (three - Rat(2) * gamma);
    if (lin.is_exact_zero()) throw NoSolution("linear coefficient of alpha vanishes");
    if (lin.is_zero_to_precision()) throw IndeterminateZero("alpha coefficient zero to precision");
    return Series::div(rhs, lin, working_span);
}

CubicCoefficients from_critical_data(const CriticalData& d) {
    const Series one = Series::from_rat(Rat(1));
    auto distinct = [](const Series& x, const Series& y) {
        Series diff = x - y;
        return !diff.is_exact_zero() && !diff.is_zero_to_precision();
    };
    if (!distinct(d.alpha, Series::zero()) || !distinct(d.beta, Series::zero()))
        throw Degenerate("alpha, beta must be nonzero");
    if (!distinct(d.alpha, d.gamma) || !distinct(d.beta, d.gamma))
        throw Degenerate("alpha, beta must differ from gamma");
    if (!distinct(d.alpha, d.beta)) throw Degenerate("alpha = beta");
    if (!distinct(d.alpha, one) || !distinct(d.beta, one))
        throw Degenerate("alpha, beta must differ from 1 (a3 != 0)");
    if (!distinct(d.gamma, one)) throw Degenerate("gamma = 1 (b2 = 0)");

    // Wr_phi(1) = 0 constraint
    Series lhs = (one - d.alpha) * (one - d.beta) * (Series::from_rat(Rat(3)) - Rat(2) * d.gamma);
    Series rhs = (one - d.gamma) * (Series::from_rat(Rat(2)) - d.alpha - d.beta);
    Series residual = lhs - rhs;
    if (residual.has_terms())
        throw ConstraintViolated("Wr(1) != 0: residual " + residual.str());

    Series u = (one - d.alpha) * (one - d.beta);
    Series w = one - d.gamma;
    CubicCoefficients c;
    c.a3 = u;
    c.a2 = -(d.gamma * u);
    c.b2 = w;
    c.b1 = -((d.alpha + d.beta) * w);
    c.b0 = d.alpha * d.beta * w;

    std::optional<Rat> m;
    for (const Series* s : {&c.a3, &c.a2, &c.b2, &c.b1, &c.b0}) {
        if (s->is_zero_to_precision())
            throw IndeterminateZero("coefficient zero to precision in from_critical_data");
        if (s->has_terms()) {
            Rat v = s->val();
            if (!m || v < *m) m = v;
        }
    }
    if (!m) throw Degenerate("all coefficients vanish");
    for (Series* s : {&c.a3, &c.a2, &c.b2, &c.b1, &c.b0}) *s = s->shifted(-*m);
    return c;
}

std::pair<SeriesPoly, SeriesPoly> wronskian_psi(const CubicCoefficients& c) {
    SeriesPoly f = c.numerator(), g = c.denominator();
    SeriesPoly wr = f.derivative() * g - f * g.derivative();
    SeriesPoly psi(std::vector<Series>{
        Rat(-2) * (c.a2 * c.b0),
        Rat(2) * (c.a3 * c.b1) + c.a3 * c.b2,
        c.a3 * c.b2,
    });
    return {wr, psi};
}

ReducedMap reduce_map(const SeriesPoly& F, const SeriesPoly& G) {
    if (F.is_zero() && G.is_zero()) throw Degenerate("reduce_map of 0/0");
    std::optional<Rat> vF, vG;
    try {
        vF = F.min_valuation();
        vG = G.min_valuation();
    } catch (const IndeterminateCoefficient& e) {
        throw;
    }
    Rat m;
    if (vF && vG) m = rat_min(*vF, *vG);
    else m = vF ? *vF : *vG;

    QPoly Fb = F.shifted(-m).reduce();
    QPoly Gb = G.shifted(-m).reduce();
    QPoly g = qpoly_gcd(Fb, Gb);
    ReducedMap out;
    if (!g.is_zero() && g.degree() >= 0) {
        out.numerator = qpoly_divmod(Fb, g).first;
        out.denominator = qpoly_divmod(Gb, g).first;
    } else {
        // one side is identically zero
        out.numerator = Fb;
        out.denominator = Gb;
    }
    out.degree = std::max(out.numerator.degree(), out.denominator.degree());
    if (out.degree <= 0) {
        out.degree = 0;
        if (out.denominator.is_zero()) {
            out.constant_infinity = true;
        } else if (out.numerator.is_zero()) {
            out.constant_value = Rat(0);
        } else {
            out.constant_value = out.numerator.c[0] / out.denominator.c[0];
        }
    }
    return out;
}

std::pair<SeriesPoly, SeriesPoly> conjugate_affine(const SeriesPoly& F, const SeriesPoly& G,
                                                   const Series& center, const Series& scale,
                                                   const std::optional<Series>& post_shift) {
    if (scale.is_exact_zero() || scale.is_zero_to_precision())
        throw Degenerate("conjugation scale must be nonzero");
    SeriesPoly Fc = F.compose_affine(center, scale);
    SeriesPoly Gc = G.compose_affine(center, scale);
    if (post_shift) Fc = Fc - Gc.scaled(*post_shift);
    return {Fc, Gc};
}

std::optional<Series> evaluate(const CubicCoefficients& c, const std::optional<Series>& z,
                               const Rat& working_span) {
    if (!z) return std::nullopt;  // infinity is fixed
    Series fv = c.numerator().eval(*z);
    Series gv = c.denominator().eval(*z);
    if (gv.is_exact_zero()) {
        if (fv.is_exact_zero()) throw IndeterminateZero("0/0 at the evaluation point");
        return std::nullopt;  // pole
    }
    if (gv.is_zero_to_precision() || (fv.is_zero_to_precision() && !gv.has_terms()))
        throw IndeterminateZero("evaluation indeterminate at working precision");
    return Series::div(fv, gv, working_span);
}

}  // namespace berk
