#include "berk/poly.hpp"

#include <algorithm>
#include <sstream>

#include "berk/errors.hpp"

namespace berk {

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const {
    QPoly out;
    for (std::size_t i = 1; i < c.size(); ++i) out.c.push_back(Rat(static_cast<long>(i)) * c[i]);
    out.trim();
    return out;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly out = *this;
    Rat lead = out.c.back();
    for (auto& k : out.c) k /= lead;
    return out;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat a = c[i];
        if (a == 0) continue;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        Rat mag = a < 0 ? Rat(-a) : a;
        if (mag != 1 || i == 0) os << rat_string(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    QPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size(), Rat(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    out.trim();
    return out;
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    QPoly r = a, q;
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat f = r.c.back() / b.c.back();
        q.c[k] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = qpoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

namespace {

// divisors of |n|, bounded enumeration
std::vector<mpz_class> small_divisors(const mpz_class& n, unsigned long limit = 200000) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    if (a == 0) return out;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (mpz_cmp_ui(d.get_mpz_t(), limit) > 0) break;
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rat, int>> qpoly_rational_roots(const QPoly& p) {
    std::vector<std::pair<Rat, int>> out;
    if (p.degree() < 1) return out;
    QPoly work = p;

    auto deflate = [&](const Rat& r) {
        int mult = 0;
        while (!work.is_zero() && work.eval(r) == 0 && work.degree() >= 1) {
            QPoly lin({-r, Rat(1)});
            auto [q, rem] = qpoly_divmod(work, lin);
            work = q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(r, mult);
    };

    deflate(Rat(0));
    while (work.degree() == 1) {
        deflate(-work.c[0] / work.c[1]);
    }
    if (work.degree() == 2) {
        Rat a = work.c[2], b = work.c[1], cc = work.c[0];
        Rat disc = b * b - 4 * a * cc;
        if (auto s = rat_sqrt(disc)) {
            deflate((-b + *s) / (2 * a));
            deflate((-b - *s) / (2 * a));
        }
    } else if (work.degree() >= 3) {
        // bounded rational-root search over divisors of the integer-cleared
        // constant and leading coefficients
        mpz_class den = 1;
        for (const auto& k : work.c) den = den_lcm(den, k);
        std::vector<mpz_class> ic;
        for (const auto& k : work.c) {
            Rat scaled = k * Rat(den);
            ic.push_back(scaled.get_num());
        }
        std::size_t lo = 0;
        while (lo < ic.size() && ic[lo] == 0) ++lo;
        if (lo < ic.size()) {
            auto ps = small_divisors(ic[lo]);
            auto qs = small_divisors(ic.back());
            for (const auto& pn : ps)
                for (const auto& qd : qs)
                    for (int sign : {1, -1}) {
                        Rat cand(sign * pn, qd);
                        cand.canonicalize();
                        if (work.eval(cand) == 0) deflate(cand);
                    }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// ---------------------------------------------------------------------------

SeriesPoly SeriesPoly::from_q(const QPoly& q) {
    std::vector<Series> cs;
    cs.reserve(q.c.size());
    for (const auto& k : q.c) cs.push_back(Series::from_rat(k));
    return SeriesPoly(std::move(cs));
}

void SeriesPoly::trim() {
    while (!c.empty() && c.back().is_exact_zero()) c.pop_back();
}

const Series& SeriesPoly::coeff(int i) const {
    static const Series kZero;
    if (i < 0 || i >= static_cast<int>(c.size())) return kZero;
    return c[i];
}

Series SeriesPoly::eval(const Series& x) const {
    Series acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

SeriesPoly SeriesPoly::derivative() const {
    std::vector<Series> out;
    for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i].scaled(Rat(static_cast<long>(i))));
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::operator+(const SeriesPoly& o) const {
    std::vector<Series> out(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::operator-(const SeriesPoly& o) const {
    std::vector<Series> out(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::operator*(const SeriesPoly& o) const {
    if (is_zero() || o.is_zero()) return SeriesPoly{};
    std::vector<Series> out(c.size() + o.c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) out[i + j] += c[i] * o.c[j];
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::scaled(const Series& s) const {
    std::vector<Series> out;
    out.reserve(c.size());
    for (const auto& k : c) out.push_back(k * s);
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::compose_affine(const Series& center, const Series& scale) const {
    // Horner against the linear polynomial center + scale*z
    SeriesPoly acc;
    SeriesPoly lin(std::vector<Series>{center, scale});
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * lin;
        acc = acc + SeriesPoly(std::vector<Series>{*it});
    }
    return acc;
}

SeriesPoly SeriesPoly::reversed() const {
    std::vector<Series> out(c.rbegin(), c.rend());
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::shifted(const Rat& e) const {
    std::vector<Series> out;
    out.reserve(c.size());
    for (const auto& k : c) out.push_back(k.shifted(e));
    SeriesPoly p;
    p.c = std::move(out);  // shifting never creates new exact zeros
    return p;
}

std::optional<Rat> SeriesPoly::min_valuation() const {
    std::optional<Rat> best;
    for (const auto& k : c) {
        if (k.has_terms()) {
            Rat v = k.val();
            if (!best || v < *best) best = v;
        }
    }
    for (const auto& k : c) {
        if (k.is_zero_to_precision()) {
            if (!best || k.precision().bound <= *best)
                throw IndeterminateCoefficient(
                    "coefficient known only to O(t^" + rat_string(k.precision().bound) + ")");
        }
    }
    return best;
}

QPoly SeriesPoly::reduce() const {
    std::vector<Rat> out;
    out.reserve(c.size());
    for (const auto& k : c) {
        try {
            out.push_back(k.residue());
        } catch (const IndeterminateValuation&) {
            throw IndeterminateCoefficient("residue indeterminate at working precision");
        }
    }
    return QPoly(std::move(out));
}

mpz_class SeriesPoly::exponent_lattice_den() const {
    mpz_class l = 1;
    for (const auto& k : c) {
        mpz_class kl = k.exponent_lattice_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kl.get_mpz_t());
    }
    return l;
}

std::string SeriesPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i].is_exact_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[i].str() << ")";
        if (i > 0) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<PolygonSegment> newton_polygon(const SeriesPoly& P) {
    if (P.degree() < 1) throw IndeterminateGeometry("polygon of a constant polynomial");
    const int n = P.degree();
    if (!P.c[n].has_terms())
        throw IndeterminateGeometry("leading coefficient has indeterminate valuation");

    struct Pt {
        int i;
        Rat v;
    };
    std::vector<Pt> pts;
    int i_min = -1;
    for (int i = 0; i <= n; ++i) {
        if (P.c[i].has_terms()) {
            if (i_min < 0) i_min = i;
            pts.push_back({i, P.c[i].val()});
        }
    }
    for (int i = 0; i < i_min; ++i)
        if (P.c[i].is_zero_to_precision())
            throw IndeterminateGeometry("low coefficient " + std::to_string(i) +
                                        " is zero only to precision");

    // lower convex hull, left to right
    std::vector<Pt> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            // keep b only if it is strictly below chord a-p
            if ((b.v - a.v) * (p.i - a.i) >= (p.v - a.v) * (b.i - a.i))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    auto hull_height = [&](int i) -> std::optional<Rat> {
        for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
            if (hull[k].i <= i && i <= hull[k + 1].i) {
                Rat t(i - hull[k].i, hull[k + 1].i - hull[k].i);
                return hull[k].v + t * (hull[k + 1].v - hull[k].v);
            }
        }
        return std::nullopt;
    };
    for (int i = i_min; i <= n; ++i) {
        if (P.c[i].is_zero_to_precision()) {
            auto h = hull_height(i);
            if (h && P.c[i].precision().bound < *h)
                throw IndeterminateGeometry("coefficient " + std::to_string(i) +
                                            " zero to precision below the hull");
        }
    }

    std::vector<PolygonSegment> segs;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        PolygonSegment s;
        s.left_index = hull[k].i;
        s.right_index = hull[k + 1].i;
        s.length = s.right_index - s.left_index;
        s.root_valuation = (hull[k].v - hull[k + 1].v) / Rat(s.length);
        segs.push_back(std::move(s));
    }
    return segs;
}

std::map<Rat, int> root_valuations(const SeriesPoly& P) {
    std::map<Rat, int> out;
    for (const auto& s : newton_polygon(P)) out[s.root_valuation] += s.length;
    return out;
}

std::vector<std::pair<Rat, int>> slope_residue_roots(const SeriesPoly& P, const Rat& slope) {
    // rescale z = t^slope * w, normalize, reduce
    std::vector<Series> cs;
    cs.reserve(P.c.size());
    for (int i = 0; i <= P.degree(); ++i) cs.push_back(P.c[i].shifted(slope * Rat(i)));
    SeriesPoly Q(std::move(cs));
    auto mv = Q.min_valuation();
    if (!mv) throw IndeterminateGeometry("zero polynomial");
    QPoly R = Q.shifted(-*mv).reduce();
    auto roots = qpoly_rational_roots(R);
    std::vector<std::pair<Rat, int>> nz;
    for (auto& [r, m] : roots)
        if (r != 0) nz.emplace_back(r, m);
    return nz;
}

Series lift_root(const SeriesPoly& P, const Rat& slope, const Rat& target_precision,
                 std::optional<Rat> residue_hint) {
    auto segs = newton_polygon(P);
    const PolygonSegment* seg = nullptr;
    for (const auto& s : segs)
        if (s.root_valuation == slope) seg = &s;
    if (!seg) throw SlopeNotSimple("no Newton-polygon segment of slope " + rat_string(slope));

    if (seg->length >= 2) {
        // a shared slope outside the coefficient exponent lattice needs
        // ramification; the model refuses rather than approximating
        mpz_class lat = P.exponent_lattice_den();
        Rat probe = slope * Rat(lat);
        if (probe.get_den() != 1)
            throw SlopeNotSimple("slope " + rat_string(slope) +
                                 " shared by " + std::to_string(seg->length) +
                                 " roots requires ramification");
    }

    auto nz = slope_residue_roots(P, slope);
    if (nz.empty()) throw ResidueRootIrrational();
    Rat r0;
    int mult = 0;
    if (residue_hint) {
        for (auto& [r, m] : nz)
            if (r == *residue_hint) {
                r0 = r;
                mult = m;
            }
        if (mult == 0) throw ResidueRootIrrational("requested residue root not found");
    } else {
        // canonical choice: the largest simple rational residue root
        for (auto& [r, m] : nz)
            if (m == 1 && (mult == 0 || r > r0)) {
                r0 = r;
                mult = m;
            }
        if (mult == 0) {
            r0 = nz.back().first;
            mult = nz.back().second;
        }
    }
    if (mult != 1) throw SlopeNotSimple("residue root " + rat_string(r0) + " is multiple");

    const Rat span = target_precision - slope + 4;
    Series r = Series::monomial(r0, slope);
    SeriesPoly dP = P.derivative();
    for (int iter = 0; iter < 64; ++iter) {
        Series e = P.eval(r);
        if (e.is_exact_zero()) return r;  // landed exactly on the root
        Series d = dP.eval(r);
        Series step = Series::div(e, d, span);
        if (step.has_terms() && step.val() >= target_precision) break;
        if (!step.has_terms()) break;  // zero to working precision
        r = (r - step).truncated(target_precision);
        if (!r.has_terms() || r.val() != slope)
            throw SlopeNotSimple("Newton iteration left the slope " + rat_string(slope));
    }
    Series check = P.eval(r);
    if (check.has_terms() && check.val() < target_precision)
        throw SlopeNotSimple("Newton iteration failed to converge");
    return r.with_precision(Prec::at(target_precision));
}

}  // namespace berk
