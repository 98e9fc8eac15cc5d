#include "berk/classifier.hpp"

#include <algorithm>
#include <set>

#include "berk/errors.hpp"

namespace berk {

namespace {

const Rat kDeepDepth = Rat(1000000);  // sentinel for exact representatives

Rat vof(const Series& s) { return s.val(); }

// residue of a coefficient with valuation >= 0
Rat res(const Series& s) { return s.residue(); }

bool residue_zero(const Series& s) { return s.residue() == 0; }

}  // namespace

// ---------------------------------------------------------------------------
// solve_psi: Newton-polygon valuations plus iterated shifted lifting.

namespace {

struct PairLift {
    std::array<std::optional<Series>, 2> lifted;
    Series rep;     // common representative when not lifted
    Rat rep_depth;
    std::string note;
};

// Lift both roots of a quadratic series polynomial, shifting into the
// common residue direction while the two roots agree.
PairLift lift_quadratic_pair(const SeriesPoly& psi, const Rat& span) {
    PairLift out;
    Series shift = Series::zero();
    for (int round = 0; round < 256; ++round) {
        SeriesPoly Q = psi.compose_affine(shift, Series::from_rat(Rat(1)));
        if (Q.coeff(0).is_exact_zero()) {
            // the accumulated shift is itself a root; the other root comes
            // from the remaining slope of Q/w
            SeriesPoly lin(std::vector<Series>{Q.coeff(1), Q.coeff(2)});
            Series other = shift - Series::div(Q.coeff(1), Q.coeff(2), span);
            out.lifted = {shift, other};
            out.rep = shift;
            out.rep_depth = kDeepDepth;
            return out;
        }
        auto segs = newton_polygon(Q);
        if (segs.size() == 2) {
            Series w0 = lift_root(Q, segs[0].root_valuation, span);
            Series w1 = lift_root(Q, segs[1].root_valuation, span);
            out.lifted = {shift + w0, shift + w1};
            out.rep = shift;
            out.rep_depth = kDeepDepth;
            return out;
        }
        // one segment of length 2
        const Rat v0 = segs[0].root_valuation;
        auto rr = slope_residue_roots(Q, v0);
        if (rr.size() == 2) {
            Series w0 = lift_root(Q, v0, span, rr[0].first);
            Series w1 = lift_root(Q, v0, span, rr[1].first);
            out.lifted = {shift + w0, shift + w1};
            out.rep = shift;
            out.rep_depth = kDeepDepth;
            return out;
        }
        if (rr.size() == 1 && rr[0].second == 2) {
            shift += Series::monomial(rr[0].first, v0);
            continue;
        }
        // irrational residue pair: both roots sit at depth v0 below shift
        out.rep = shift;
        out.rep_depth = v0;
        {
            // record the residue quadratic of the rescaled shifted psi
            std::vector<Series> cs;
            for (int i = 0; i <= Q.degree(); ++i) cs.push_back(Q.coeff(i).shifted(v0 * Rat(i)));
            SeriesPoly R(std::move(cs));
            auto mv = R.min_valuation();
            out.note = "residue roots of " + R.shifted(-*mv).reduce().str("u") + " (irrational)";
        }
        return out;
    }
    throw IterationCap();
}

}  // namespace

CriticalPair solve_psi(const CubicCoefficients& c, const Rat& span) {
    auto [wr, psi] = wronskian_psi(c);
    if (psi.degree() != 2) throw Degenerate("psi is not quadratic");
    if (psi.coeff(0).is_exact_zero())
        throw Degenerate("psi(0) = 0: a critical point collides with 0");

    const Series& A = psi.coeff(2);
    const Series& B = psi.coeff(1);
    const Series& C0 = psi.coeff(0);

    auto vals = root_valuations(psi);
    std::array<Rat, 2> vc;
    {
        int k = 0;
        for (auto& [v, m] : vals)
            for (int i = 0; i < m; ++i) vc[k++] = v;
    }

    // v(1 - c_i): polygon of psi(1+w)
    SeriesPoly psi1 = psi.compose_affine(Series::from_rat(Rat(1)), Series::from_rat(Rat(1)));
    if (psi1.coeff(0).is_exact_zero())
        throw Degenerate("psi(1) = 0: a critical point collides with 1");
    auto vals1 = root_valuations(psi1);
    std::array<Rat, 2> v1c;
    {
        int k = 0;
        for (auto& [v, m] : vals1)
            for (int i = 0; i < m; ++i) v1c[k++] = v;
    }

    Series disc = B * B - Rat(4) * (A * C0);
    if (disc.is_exact_zero()) throw Degenerate("psi has a double root");
    if (!disc.has_terms()) throw IndeterminateZero("disc(psi) zero to precision");
    Rat vdiff = disc.val() / 2 - A.val();

    PairLift lift = lift_quadratic_pair(psi, span);

    // assemble the two descriptors, keeping (v, v(1-c), lift) coherent per root
    std::array<RootDescriptor, 2> d;
    if (lift.lifted[0] && lift.lifted[1]) {
        for (int i = 0; i < 2; ++i) {
            d[i].lifted = lift.lifted[i];
            d[i].rep = *lift.lifted[i];
            d[i].rep_depth =
                d[i].rep.precision().finite ? d[i].rep.precision().bound : kDeepDepth;
            d[i].v = lift.lifted[i]->val();
            d[i].note = lift.note;
        }
        // v(1-c) from the lifted values, the exact polygon multiset as fallback
        std::multiset<Rat> pool = {v1c[0], v1c[1]};
        std::array<std::optional<Rat>, 2> got;
        for (int i = 0; i < 2; ++i) {
            Series om = Series::from_rat(Rat(1)) - *lift.lifted[i];
            if (om.has_terms()) {
                auto it = pool.find(om.val());
                if (it != pool.end()) {
                    got[i] = om.val();
                    pool.erase(it);
                }
            }
        }
        for (int i = 0; i < 2; ++i) {
            if (!got[i]) {
                got[i] = *pool.begin();
                pool.erase(pool.begin());
            }
            d[i].v_one_minus = *got[i];
        }
    } else {
        // not liftable over Q: the two roots share the tracked coordinates
        if (vc[0] != vc[1] || v1c[0] != v1c[1])
            throw Degenerate("unlifted roots with distinct polygon data");
        for (int i = 0; i < 2; ++i) {
            d[i].v = vc[i];
            d[i].v_one_minus = v1c[i];
            d[i].rep = lift.rep;
            d[i].rep_depth = lift.rep_depth;
            d[i].note = lift.note;
        }
    }

    CriticalPair out;
    // deterministic order: valuation, then v(1-c), then residue of the lift
    bool swap = false;
    if (d[0].v != d[1].v) {
        swap = d[1].v < d[0].v;
    } else if (d[0].v_one_minus != d[1].v_one_minus) {
        swap = d[1].v_one_minus < d[0].v_one_minus;
    } else if (d[0].lifted && d[1].lifted) {
        Series diff0 = d[0].lifted->shifted(-d[0].v);
        Series diff1 = d[1].lifted->shifted(-d[1].v);
        swap = diff1.residue() < diff0.residue();
    }
    out.c1 = swap ? d[1] : d[0];
    out.c2 = swap ? d[0] : d[1];
    out.v_diff = vdiff;
    return out;
}

// ---------------------------------------------------------------------------

DeepCaseParams deep_case_params(const CubicCoefficients& c, const Rat& span) {
    DeepCaseParams out;
    // q = gamma - 1 = -(a2 + a3)/a3
    Series num = -(c.a2 + c.a3);
    if (num.is_exact_zero()) throw Degenerate("gamma = 1");
    out.q = Series::div(num, c.a3, span);
    // p = beta - 1/2: the positive-valuation root of g(1/2 + w)
    SeriesPoly g = c.denominator();
    SeriesPoly gs = g.compose_affine(Series::from_rat(rat(1, 2)), Series::from_rat(Rat(1)));
    auto segs = newton_polygon(gs);
    const PolygonSegment* pos = nullptr;
    for (const auto& s : segs)
        if (s.root_valuation > 0) pos = &s;
    if (!pos) throw Degenerate("no root of g near 1/2");
    out.p = lift_root(gs, pos->root_valuation, span);

    Rat vp = out.p.val(), vq = out.q.val();
    auto vgt = [&](const Series& s, const Rat& v) {
        // v(s) > v, with zero-to-precision treated as indeterminate
        if (s.is_exact_zero()) return true;
        if (!s.has_terms()) throw IndeterminateZero("deep-case comparison at precision limit");
        return s.val() > v;
    };
    if (vp > vq) out.subcase = 1;
    else if (vp < vq) out.subcase = 3;
    else if (vgt(out.p + out.q, vp)) out.subcase = 2;
    else if (vgt(out.p - Rat(2) * out.q, vp)) out.subcase = 4;
    else if (vgt(Rat(4) * out.p + out.q, vp)) out.subcase = 5;
    else out.subcase = 6;
    return out;
}

CaseLabel classify_case(const CubicCoefficients& c, const Rat& span) {
    if (c.a2.is_exact_zero())
        throw UnclassifiableInput("a2 = 0: 0 is a triple critical point (polynomial conjugate)");
    for (const Series* s : {&c.a3, &c.a2, &c.b2, &c.b1, &c.b0})
        if (s->is_zero_to_precision())
            throw UnclassifiableInput("coefficient known only to precision");

    const bool a3z = residue_zero(c.a3);
    const bool a2z = residue_zero(c.a2);
    const bool b2z = residue_zero(c.b2);
    const bool b0z = c.b0.is_exact_zero() ? true : residue_zero(c.b0);
    const bool b1z = c.b1.is_exact_zero() ? true : residue_zero(c.b1);

    // v(g(gamma)) compared against 0 via the resultant: gval = a3^2 g(gamma)
    Series gval = c.common_root_resultant();
    if (gval.is_exact_zero()) throw UnclassifiableInput("f and g share a root");
    const bool ggz = gval.val() > 2 * vof(c.a3);

    if (a3z) {
        if (a2z) {
            if (vof(c.a2) >= vof(c.a3)) return ggz ? CaseLabel{"1-1-1-1"} : CaseLabel{"1-1-1-2"};
            return CaseLabel{"1-1-2"};
        }
        if (b0z) {
            if (b1z) {
                Rat va3 = vof(c.a3);
                Rat vb1 = c.b1.is_exact_zero() ? va3 + 1 : vof(c.b1);
                Rat vb0 = c.b0.is_exact_zero() ? va3 + 1 : vof(c.b0);
                if (c.b1.is_exact_zero() ? false : vb1 < va3) return CaseLabel{"1-2-1-1-1"};
                if (vb0 > va3 || c.b0.is_exact_zero()) return CaseLabel{"1-2-1-1-2"};
                return CaseLabel{"1-2-1-1-3"};
            }
            return CaseLabel{"1-2-1-2"};  // empty under heart+club; kept as drawn
        }
        return CaseLabel{"1-2-2"};
    }
    if (a2z) {
        return b0z ? CaseLabel{"2-1-1"} : CaseLabel{"2-1-2"};
    }
    if (b0z) {
        if (b2z) return CaseLabel{"2-2-1-1"};
        return ggz ? CaseLabel{"2-2-1-2-1"} : CaseLabel{"2-2-1-2-2"};
    }
    if (b2z) {
        return ggz ? CaseLabel{"2-2-2-1-1"} : CaseLabel{"2-2-2-1-2"};
    }
    if (!ggz) return CaseLabel{"2-2-2-2-2"};

    // 2-2-2-2-1-*: gamma-bar is a root of g-bar; the subcase needs
    // gamma-bar = 1 and the other root = 1/2
    Rat gamma_bar = -res(c.a2) / res(c.a3);
    Rat prod = res(c.b0) / res(c.b2);  // alpha-bar * beta-bar
    if (gamma_bar == 1 && prod * 2 == 1) {
        CaseLabel out{"2-2-2-2-1-1"};
        out.deep_subcase = deep_case_params(c, span).subcase;
        return out;
    }
    return CaseLabel{"2-2-2-2-1-2"};
}

// ---------------------------------------------------------------------------

HullTree critical_hull(const CriticalPair& roots) {
    QuartetValuations q;
    q.v01 = Rat(0);
    q.v0c1 = roots.c1.v;
    q.v0c2 = roots.c2.v;
    q.v1c1 = roots.c1.v_one_minus;
    q.v1c2 = roots.c2.v_one_minus;
    q.vc1c2 = roots.v_diff;
    std::array<Series, 2> reps = {roots.c1.rep, roots.c2.rep};
    std::array<Rat, 2> depths = {roots.c1.rep_depth, roots.c2.rep_depth};
    std::array<std::optional<Series>, 2> exact = {roots.c1.lifted, roots.c2.lifted};
    return hull_from_valuations(q, reps, depths, exact);
}

namespace {

const std::set<std::string> kConnectedLeaves = {"1-1-1-2", "1-2-1-1-3", "2-1-2", "2-2-2-1-2",
                                                "2-2-2-2-2"};
const std::set<std::string> kTwoSegLeaves = {"1-1-1-1",   "1-1-2",      "1-2-1-1-1", "1-2-1-1-2",
                                             "1-2-1-2",   "2-1-1",      "1-2-2",     "2-2-1-1",
                                             "2-2-1-2-1", "2-2-1-2-2",  "2-2-2-1-1", "2-2-2-2-1-2"};

enum class JClass { Gauss, Dir0, Dir1, Outer, Other };

JClass classify_join(const Series& center, const Rat& exp) {
    if (exp < 0) return JClass::Outer;
    if (exp == 0) return JClass::Gauss;
    // positive exponent: direction by the residue of the center
    Series c0 = center;
    if (c0.is_exact_zero()) return JClass::Dir0;
    if (!c0.has_terms()) return JClass::Other;
    if (c0.val() > 0) return JClass::Dir0;
    if (c0.val() < 0) return JClass::Outer;
    Rat r = c0.residue();
    if (r == 0) return JClass::Dir0;
    if (r == 1) return JClass::Dir1;
    return JClass::Other;
}

std::string figure_tag_for(const CaseLabel& label, const LocusDescription& d) {
    if (d.connected) return "";
    const HullTree& h = d.hull;
    // segment joins: j(x, y) for each paired leaf set
    auto seg_class = [&](int k) {
        int i = d.segments[k][0];
        // center of the join: a leaf representative valid at the join depth
        const Series& ci = h.leaf_center[i];
        return classify_join(ci, d.segment_exp[k]);
    };
    // orient: which segment holds leaf "0" / leaf "1"
    int s0 = -1, s1 = -1;
    for (int k = 0; k < 2; ++k)
        for (int idx : d.segments[k]) {
            if (h.names[idx] == "0") s0 = k;
            if (h.names[idx] == "1") s1 = k;
        }
    if (s0 < 0 || s1 < 0) return "";
    if (s0 == s1) {
        // pairing {0,1} | {c1,c2}
        JClass jcc = seg_class(1 - s0);
        if (jcc == JClass::Outer) return "Fig4";
        if (jcc == JClass::Other) return "Fig9";
        return "";
    }
    JClass j0 = seg_class(s0), j1 = seg_class(s1);
    if (j0 == JClass::Gauss && j1 == JClass::Dir1)
        return label.path == "2-2-2-2-1-2" ? "Fig10" : "Fig3";
    if (j0 == JClass::Dir0 && j1 == JClass::Dir1) return "Fig5";
    if (j0 == JClass::Dir0 && j1 == JClass::Outer) return "Fig6";
    if (j0 == JClass::Dir0 && j1 == JClass::Gauss) return "Fig7";
    if (j0 == JClass::Outer && j1 == JClass::Dir1) return "Fig8";
    return "";
}

LocusDescription make_two_components(const HullTree& hull, const CaseLabel& label) {
    if (hull.star)
        throw PairingUndefined("two-components verdict demanded but the hull is a star");
    LocusDescription d;
    d.connected = false;
    d.hull = hull;
    d.label = label;
    d.segments = {hull.pairA, hull.pairB};
    // junction radius of a segment = v(difference of its endpoints)
    d.segment_exp = {hull.pairwise[hull.pairA[0]][hull.pairA[1]],
                     hull.pairwise[hull.pairB[0]][hull.pairB[1]]};
    d.figure_tag = figure_tag_for(label, d);
    return d;
}

LocusDescription make_connected(const HullTree& hull, const CaseLabel& label) {
    LocusDescription d;
    d.connected = true;
    d.hull = hull;
    d.label = label;
    return d;
}

}  // namespace

LocusDescription decide_locus_symbolic(const CubicCoefficients&, const CaseLabel& label,
                                       const CriticalPair& roots) {
    HullTree hull = critical_hull(roots);
    if (label.path == "2-2-2-2-1-1") {
        // printed propositions: subcase 2 two components {0,c-},{1,c+};
        // subcases 1, 3, 4, 5, 6 connected
        if (label.deep_subcase && *label.deep_subcase == 2) {
            LocusDescription d = make_two_components(hull, label);
            return d;
        }
        return make_connected(hull, label);
    }
    if (kConnectedLeaves.count(label.path)) return make_connected(hull, label);
    if (kTwoSegLeaves.count(label.path)) return make_two_components(hull, label);
    throw UnclassifiableInput("no verdict for label " + label.path);
}

LocusDescription decide_locus_oracle(const CubicCoefficients& c, const HullTree& hull,
                                     const CaseLabel& label, std::vector<std::string>* notes) {
    SeriesPoly F = c.numerator(), G = c.denominator();
    auto note = [&](const std::string& s) {
        if (notes) notes->push_back(s);
    };
    if (hull.star) {
        note("hull is a star at " + BerkPoint::disk(hull.jA.center, hull.jA.radius_exp).str());
        return make_connected(hull, label);
    }
    // probe the interior of the central edge; when the edge dips through the
    // join of the junction centers, probe the bend and both arc midpoints
    int m = 3;
    auto probe = [&](const HullJunction& j, const Rat& e, const char* what) {
        if (j.validity_depth < e)
            throw RootsNotLiftable("no rational center reaches the central-edge " +
                                   std::string(what));
        int mi = multiplicity_at(F, G, BerkPoint::disk(j.center, e));
        note(std::string("central-edge ") + what + " (exponent " + rat_string(e) +
             ") multiplicity " + std::to_string(mi));
        m = std::min(m, mi);
    };
    auto bend = central_bend_exp(hull);
    if (!bend) {
        const HullJunction& deep = hull.jA.radius_exp >= hull.jB.radius_exp ? hull.jA : hull.jB;
        probe(deep, (hull.jA.radius_exp + hull.jB.radius_exp) / 2, "midpoint");
    } else {
        probe(hull.jA, *bend, "bend");
        if (m >= 2) {
            probe(hull.jA, (*bend + hull.jA.radius_exp) / 2, "midpoint");
            probe(hull.jB, (*bend + hull.jB.radius_exp) / 2, "midpoint");
        }
    }
    if (m >= 2) return make_connected(hull, label);

    LocusDescription d = make_two_components(hull, label);
    // confirm the paired segments carry multiplicity >= 2
    for (const HullJunction* j : {&hull.jA, &hull.jB}) {
        int mj = multiplicity_at(F, G, BerkPoint::disk(j->center, j->radius_exp));
        if (mj < 2)
            note("segment junction at exponent " + rat_string(j->radius_exp) +
                 " has multiplicity " + std::to_string(mj));
    }
    for (int i = 0; i < 4; ++i) {
        const HullJunction& j = hull.junction(hull.attach[i]);
        Rat e = j.radius_exp + 1;
        if (hull.leaf_depth[i] < e) continue;
        int ml = multiplicity_at(F, G, BerkPoint::disk(hull.leaf_center[i], e));
        if (ml < 2)
            note("leaf segment " + hull.names[i] + " sample has multiplicity " +
                 std::to_string(ml));
    }
    return d;
}

// ---------------------------------------------------------------------------

BulletMatch theorem1_match(const CubicCoefficients& c, const CaseLabel& label, const Rat& span) {
    (void)span;
    BulletMatch out;
    auto small = [](const Series& s) { return s.is_exact_zero() || s.residue() == 0; };
    auto unit = [](const Series& s) { return !s.is_exact_zero() && s.residue() != 0; };
    // valuation comparisons with exact zero treated as +infinity
    auto vle = [](const Series& x, const Series& y) {
        if (y.is_exact_zero()) return true;
        if (x.is_exact_zero()) return false;
        return x.val() <= y.val();
    };
    auto vlt = [&](const Series& x, const Series& y) {
        if (x.is_exact_zero()) return false;
        if (y.is_exact_zero()) return true;
        return x.val() < y.val();
    };
    auto veq = [](const Series& x, const Series& y) {
        if (x.is_exact_zero() || y.is_exact_zero())
            return x.is_exact_zero() && y.is_exact_zero();
        return x.val() == y.val();
    };

    const Series& a3 = c.a3;
    const Series& a2 = c.a2;
    const Series& b2 = c.b2;
    const Series& b1 = c.b1;
    const Series& b0 = c.b0;

    Series gval = c.common_root_resultant();
    bool gg_small = gval.val() > 2 * a3.val();          // |g(gamma)| < 1
    bool gg_unit = !gg_small;

    // |gamma - 1|: gamma - 1 = -(a2+a3)/a3
    Series g1num = a2 + a3;
    bool gm1_small = g1num.is_exact_zero() || (g1num.has_terms() && g1num.val() > a3.val());
    bool gm1_unit = !g1num.is_exact_zero() && g1num.has_terms() && g1num.val() == a3.val();
    std::optional<Rat> v_gm1;
    if (g1num.has_terms()) v_gm1 = g1num.val() - a3.val();

    // |beta - 1/2| in the four-units, g(gamma)-small context
    SeriesPoly g = c.denominator();
    Series ghalf = g.eval(Series::from_rat(rat(1, 2)));
    std::optional<Rat> v_bh;
    bool bh_small = false;
    if (ghalf.is_exact_zero()) {
        bh_small = true;  // beta = 1/2 exactly
    } else if (ghalf.has_terms()) {
        v_bh = ghalf.val() - b2.val();
        bh_small = *v_bh > 0;
    }

    bool units4 = unit(a3) && unit(a2) && unit(b2) && unit(b0);
    bool not_deep11 = label.path != "2-2-2-2-1-1";

    // connected bullets
    if (small(a2) && unit(a3) && unit(b0)) out.connected.push_back("|a2|<1, |a3|=|b0|=1");
    if (small(b2) && unit(a3) && unit(a2) && unit(b0) && gg_unit)
        out.connected.push_back("|b2|<1, |a3|=|a2|=|b0|=|g(gamma)|=1");
    if (units4 && gg_unit) out.connected.push_back("|a3|=|a2|=|b2|=|b0|=|g(gamma)|=1");
    if (small(a3) && small(a2) && vle(a3, a2) && gm1_unit)
        out.connected.push_back("|a3|,|a2|<1, |a3|>=|a2|, |gamma-1|=1");
    if (small(a3) && small(b1) && small(b0) && unit(a2) && veq(a3, b0) && vle(a3, b1))
        out.connected.push_back("|a3|,|b1|,|b0|<1, |a2|=1, |a3|=|b0|, |a3|>=|b1|");
    if (units4 && gg_small && v_gm1 && v_bh && *v_gm1 >= *v_bh && bh_small)
        out.connected.push_back("units, |g(gamma)|<1, |gamma-1|<=|beta-1/2|<1");

    // two-segment bullets
    if (small(a3) && unit(a2) && unit(b0)) out.two_segments.push_back("|a3|<1, |a2|=|b0|=1");
    if (small(b0) && unit(a3) && unit(b2) && unit(b1))
        out.two_segments.push_back("|b0|<1, |a3|=|b2|=|b1|=1");
    if (small(b0) && small(b2) && unit(a3) && unit(a2) && unit(b1))
        out.two_segments.push_back("|b0|,|b2|<1, |a3|=|a2|=|b1|=1");
    if (small(b2) && unit(a3) && unit(a2) && unit(b0) && gg_small)
        out.two_segments.push_back("|b2|<1, |a3|=|a2|=|b0|=1, |g(gamma)|<1");
    if (small(a3) && small(a2) && gg_small) out.two_segments.push_back("|a3|,|a2|<1, |g(gamma)|<1");
    if (small(a3) && small(a2) && vlt(a2, a3))
        out.two_segments.push_back("|a3|,|a2|<1, |a2|>|a3|");
    if (small(a3) && small(b1) && small(b0) && unit(a2) && vlt(b1, a3))
        out.two_segments.push_back("|a3|,|b1|,|b0|<1, |a2|=1, |b1|>|a3|");
    if (small(a3) && small(b1) && small(b0) && unit(a2) && vlt(a3, b0) && vle(a3, b1))
        out.two_segments.push_back("|a3|,|b1|,|b0|<1, |a2|=1, |a3|>|b0|, |a3|>=|b1|");
    if (units4 && gg_small && gm1_small && not_deep11)
        out.two_segments.push_back("units, |g(gamma)|<1, |gamma-1|!=1 [read as 2-2-2-2-1-2]");
    if (units4 && gg_small && bh_small && not_deep11)
        out.two_segments.push_back("units, |g(gamma)|<1, |beta-1/2|!=1 [read as 2-2-2-2-1-2]");
    if (units4 && gg_small && v_gm1 && v_bh && *v_gm1 < *v_bh && *v_gm1 > 0)
        out.two_segments.push_back("units, |g(gamma)|<1, 1>|gamma-1|>|beta-1/2|");
    return out;
}

CrossReport cross_check(const CubicCoefficients& c, const Rat& span) {
    CrossReport rep;
    rep.label = classify_case(c, span);
    CriticalPair roots = solve_psi(c, span);
    HullTree hull = critical_hull(roots);
    try {
        rep.symbolic = decide_locus_symbolic(c, rep.label, roots);
    } catch (const Error& e) {
        rep.symbolic_error = e.what();
        rep.notes.push_back(std::string("symbolic verdict unavailable: ") + e.what());
    }
    rep.oracle = decide_locus_oracle(c, hull, rep.label, &rep.notes);
    rep.bullets = theorem1_match(c, rep.label, span);

    rep.agreement = true;
    if (rep.symbolic) {
        if (rep.symbolic->connected != rep.oracle.connected) {
            rep.agreement = false;
            rep.notes.push_back("symbolic table and multiplicity oracle disagree; the oracle "
                                "verdict is authoritative");
        }
    } else {
        rep.agreement = false;
    }
    auto imp = rep.bullets.implies_connected();
    if (imp && *imp != rep.oracle.connected) {
        rep.agreement = false;
        rep.notes.push_back("theorem-1 bullet matcher disagrees with the oracle");
    }
    if (!imp) {
        if (rep.bullets.connected.empty() && rep.bullets.two_segments.empty())
            rep.notes.push_back("no theorem-1 bullet matches");
        else {
            rep.agreement = false;
            rep.notes.push_back("theorem-1 bullets match on both sides");
        }
    }
    return rep;
}

CubicCoefficients from_pq(const Series& p, const Series& q, const Rat& span) {
    auto positive_val = [](const Series& s) {
        return s.is_exact_zero() || (s.has_terms() && s.val() > 0);
    };
    if (!positive_val(p) || !positive_val(q))
        throw Degenerate("p and q must have positive valuation");
    CriticalData d;
    d.beta = Series::from_rat(rat(1, 2)) + p;
    d.gamma = Series::from_rat(Rat(1)) + q;
    d.alpha = solve_alpha(d.beta, d.gamma, span);
    return from_critical_data(d);
}

}  // namespace berk
