#include "berk/berkovich.hpp"

#include <algorithm>

#include "berk/errors.hpp"

namespace berk {

bool BerkPoint::is_gauss() const {
    if (kind != Kind::Disk || radius_exp != 0) return false;
    if (value.is_exact_zero()) return true;
    return value.has_terms() && value.val() >= 0;
}

bool BerkPoint::same_point(const BerkPoint& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Infinity:
            return true;
        case Kind::Classical:
            return (value - o.value).is_exact_zero();
        case Kind::Disk: {
            if (radius_exp != o.radius_exp) return false;
            Series d = value - o.value;
            if (d.is_exact_zero()) return true;
            if (d.has_terms()) return d.val() >= radius_exp;
            // centers agree only to precision; equal if the bound reaches the radius
            return d.precision().bound >= radius_exp;
        }
    }
    return false;
}

std::string BerkPoint::str() const {
    switch (kind) {
        case Kind::Infinity:
            return "inf";
        case Kind::Classical:
            return value.str();
        case Kind::Disk:
            return "zeta(" + value.str() + "; " + rat_string(radius_exp) + ")";
    }
    return "?";
}

BerkPoint join(const BerkPoint& a, const BerkPoint& b) {
    if (a.kind == BerkPoint::Kind::Infinity && b.kind == BerkPoint::Kind::Infinity)
        throw Degenerate("join of coincident points");
    if (a.kind == BerkPoint::Kind::Infinity || b.kind == BerkPoint::Kind::Infinity) {
        const BerkPoint& fin = a.kind == BerkPoint::Kind::Infinity ? b : a;
        Rat v0 = fin.value.is_exact_zero() ? Rat(0) : rat_min(fin.value.val(), Rat(0));
        return BerkPoint::disk(fin.value, v0);
    }
    Series d = a.value - b.value;
    if (d.is_exact_zero()) throw Degenerate("join of coincident points");
    if (!d.has_terms()) throw IndeterminateValuation();
    return BerkPoint::disk(a.value, d.val());
}

BerkPoint med(const BerkPoint& a, const BerkPoint& b, const BerkPoint& c) {
    BerkPoint j1 = join(a, b), j2 = join(a, c), j3 = join(b, c);
    const BerkPoint* best = &j1;
    if (j2.radius_exp > best->radius_exp) best = &j2;
    if (j3.radius_exp > best->radius_exp) best = &j3;
    return *best;
}

std::string HullTree::pairing_str() const {
    if (star) return "star";
    return "{" + names[pairA[0]] + "," + names[pairA[1]] + "}|{" + names[pairB[0]] + "," +
           names[pairB[1]] + "}";
}

namespace {

HullTree build_hull(const std::array<std::array<Rat, 4>, 4>& v,
                    const std::array<Series, 4>& centers, const std::array<Rat, 4>& depths,
                    const std::array<bool, 4>& exact, const std::array<std::string, 4>& names) {
    // three pairings and their valuation sums; the strict maximum is the split
    const std::array<std::array<int, 4>, 3> pairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    std::array<Rat, 3> sums;
    for (int k = 0; k < 3; ++k)
        sums[k] = v[pairings[k][0]][pairings[k][1]] + v[pairings[k][2]][pairings[k][3]];

    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (sums[k] > sums[best]) best = k;
    int winners = 0;
    for (int k = 0; k < 3; ++k)
        if (sums[k] == sums[best]) ++winners;

    HullTree h;
    h.names = names;
    h.leaf_center = centers;
    h.leaf_depth = depths;
    h.leaf_exact = exact;
    h.pairwise = v;

    auto join_of = [&](int i, int j) {
        const Rat r = v[i][j];
        auto usable = [&](int k) { return exact[k] || depths[k] >= r; };
        int ci = i;
        if (!usable(i) && usable(j)) {
            ci = j;
        } else if (usable(i) && usable(j) && !exact[i] &&
                   (exact[j] || depths[j] > depths[i])) {
            ci = j;
        }
        return HullJunction{centers[ci], r, depths[ci]};
    };
    auto med_of = [&](int i, int j, int k) {
        Rat m = rat_max(v[i][j], rat_max(v[i][k], v[j][k]));
        if (v[i][j] == m) return join_of(i, j);
        if (v[i][k] == m) return join_of(i, k);
        return join_of(j, k);
    };

    if (winners == 3) {
        h.star = true;
        h.jA = med_of(0, 1, 2);
        h.jB = h.jA;
        h.attach = {0, 0, 0, 0};
        return h;
    }
    if (winners != 1)
        throw Degenerate("quartet violates the four-point condition");

    const auto& p = pairings[best];
    h.pairA = {p[0], p[1]};
    h.pairB = {p[2], p[3]};
    h.jA = med_of(p[0], p[1], p[2]);
    h.jB = med_of(p[2], p[3], p[0]);
    h.attach = {};
    h.attach[p[0]] = 0;
    h.attach[p[1]] = 0;
    h.attach[p[2]] = 1;
    h.attach[p[3]] = 1;
    return h;
}

}  // namespace

HullTree hull_of_quartet(const std::array<BerkPoint, 4>& pts,
                         const std::array<std::string, 4>& names) {
    std::array<std::array<Rat, 4>, 4> v{};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (pts[i].kind != BerkPoint::Kind::Classical ||
                pts[j].kind != BerkPoint::Kind::Classical)
                throw Degenerate("hull_of_quartet needs finite classical points");
            Series d = pts[i].value - pts[j].value;
            if (d.is_exact_zero()) throw Degenerate("quartet points must be distinct");
            if (!d.has_terms()) throw IndeterminateValuation();
            v[i][j] = v[j][i] = d.val();
        }
    std::array<Series, 4> centers;
    std::array<Rat, 4> depths;
    std::array<bool, 4> exact;
    for (int i = 0; i < 4; ++i) {
        centers[i] = pts[i].value;
        depths[i] = pts[i].value.precision().finite ? pts[i].value.precision().bound : Rat(1000000);
        exact[i] = !pts[i].value.precision().finite;
    }
    return build_hull(v, centers, depths, exact, names);
}

HullTree hull_from_valuations(const QuartetValuations& q, const std::array<Series, 2>& c_reps,
                              const std::array<Rat, 2>& c_depths,
                              const std::array<std::optional<Series>, 2>& c_exact,
                              const std::array<std::string, 4>& names) {
    std::array<std::array<Rat, 4>, 4> v{};
    v[0][1] = v[1][0] = q.v01;
    v[0][2] = v[2][0] = q.v0c1;
    v[0][3] = v[3][0] = q.v0c2;
    v[1][2] = v[2][1] = q.v1c1;
    v[1][3] = v[3][1] = q.v1c2;
    v[2][3] = v[3][2] = q.vc1c2;
    std::array<Series, 4> centers = {Series::zero(), Series::from_rat(Rat(1)), c_reps[0],
                                     c_reps[1]};
    std::array<Rat, 4> depths = {Rat(1000000), Rat(1000000), c_depths[0], c_depths[1]};
    std::array<bool, 4> exact = {true, true, bool(c_exact[0]), bool(c_exact[1])};
    return build_hull(v, centers, depths, exact, names);
}

std::optional<Rat> central_bend_exp(const HullTree& h) {
    if (h.star) return std::nullopt;
    Series d = h.jA.center - h.jB.center;
    Rat lo = rat_min(h.jA.radius_exp, h.jB.radius_exp);
    if (d.is_exact_zero()) return std::nullopt;
    if (!d.has_terms()) {
        if (d.precision().bound >= lo) return std::nullopt;
        throw IndeterminateValuation();
    }
    if (d.val() >= lo) return std::nullopt;
    return d.val();
}

// ---------------------------------------------------------------------------

LocalDegree reduced_map_at(const SeriesPoly& F, const SeriesPoly& G, const BerkPoint& x,
                           int iteration_cap) {
    if (x.kind != BerkPoint::Kind::Disk) throw Degenerate("multiplicity_at needs a disk point");
    Series scale = Series::t_pow(x.radius_exp);
    SeriesPoly Fc = F.compose_affine(x.value, scale);
    SeriesPoly Gc = G.compose_affine(x.value, scale);

    LocalDegree out;
    for (int it = 0; it < iteration_cap; ++it) {
        out.iterations = it;
        std::optional<Rat> vF, vG;
        try {
            vF = Fc.min_valuation();
            vG = Gc.min_valuation();
        } catch (const IndeterminateCoefficient& e) {
            // locate the tightest precision bound for the report
            Rat bound(0);
            bool found = false;
            for (const SeriesPoly* P : {&Fc, &Gc})
                for (const auto& k : P->c)
                    if (k.is_zero_to_precision() && (!found || k.precision().bound < bound)) {
                        bound = k.precision().bound;
                        found = true;
                    }
            throw PrecisionExhausted(found ? rat_string(bound) : "?");
        }
        if (!vF || !vG) throw Degenerate("multiplicity of a degenerate (zero) map");
        Fc = Fc.shifted(-*vF);
        Gc = Gc.shifted(-*vG);
        QPoly Fb, Gb;
        try {
            Fb = Fc.reduce();
            Gb = Gc.reduce();
        } catch (const IndeterminateCoefficient&) {
            throw PrecisionExhausted("0");
        }
        QPoly g = qpoly_gcd(Fb, Gb);
        QPoly n = g.is_zero() ? Fb : qpoly_divmod(Fb, g).first;
        QPoly d = g.is_zero() ? Gb : qpoly_divmod(Gb, g).first;
        int deg = std::max(n.degree(), d.degree());
        if (deg >= 1) {
            out.degree = deg;
            out.red_num = n;
            out.red_den = d;
            return out;
        }
        // constant reduction: both n, d nonzero constants after separate
        // normalization; subtract the minimal lift and go again
        Rat cbar = n.c[0] / d.c[0];
        Fc = Fc - Gc.scaled(Series::from_rat(cbar));
    }
    throw IterationCap();
}

int multiplicity_at(const SeriesPoly& F, const SeriesPoly& G, const BerkPoint& x,
                    int iteration_cap) {
    return reduced_map_at(F, G, x, iteration_cap).degree;
}

// ---------------------------------------------------------------------------

namespace {

void sample_point(std::vector<TraceSample>& out, const SeriesPoly& F, const SeriesPoly& G,
                  BerkPoint pt, const std::string& edge, bool interior_central) {
    TraceSample s;
    s.point = std::move(pt);
    s.edge = edge;
    s.interior_central = interior_central;
    try {
        s.multiplicity = multiplicity_at(F, G, s.point);
    } catch (const Error& e) {
        s.error = e.what();
    }
    out.push_back(std::move(s));
}

}  // namespace

std::vector<TraceSample> trace_locus(const SeriesPoly& F, const SeriesPoly& G,
                                     const HullTree& hull, int samples_per_edge) {
    if (samples_per_edge < 1) throw Degenerate("samples_per_edge must be >= 1");
    std::vector<TraceSample> out;

    auto junction_point = [&](const HullJunction& j) {
        return BerkPoint::disk(j.center, j.radius_exp);
    };

    auto central_sample = [&](const Series& center, const Rat& validity, const Rat& e) {
        TraceSample s;
        s.point = BerkPoint::disk(center, e);
        s.edge = "central";
        s.interior_central = true;
        if (validity < e) {
            s.error = "center representative valid only to O(t^" + rat_string(validity) + ")";
        } else {
            try {
                s.multiplicity = multiplicity_at(F, G, s.point);
            } catch (const Error& ex) {
                s.error = ex.what();
            }
        }
        out.push_back(std::move(s));
    };
    auto central_arc = [&](const HullJunction& j, const Rat& lo, const Rat& hi,
                           bool include_lo) {
        // arc of disks around j.center with exponents in [lo, hi)
        if (include_lo && lo < hi) central_sample(j.center, j.validity_depth, lo);
        for (int k = 1; k <= samples_per_edge; ++k) {
            Rat e = lo + (hi - lo) * Rat(k, samples_per_edge + 1);
            if (e == lo || e == hi) continue;
            central_sample(j.center, j.validity_depth, e);
        }
    };

    sample_point(out, F, G, junction_point(hull.jA), "junction", false);
    if (!hull.star) {
        sample_point(out, F, G, junction_point(hull.jB), "junction", false);
        auto bend = central_bend_exp(hull);
        if (!bend) {
            const HullJunction& deep =
                hull.jA.radius_exp >= hull.jB.radius_exp ? hull.jA : hull.jB;
            central_arc(deep, rat_min(hull.jA.radius_exp, hull.jB.radius_exp),
                        rat_max(hull.jA.radius_exp, hull.jB.radius_exp), false);
        } else {
            // the edge descends to the bend and climbs back up
            central_arc(hull.jA, *bend, hull.jA.radius_exp, true);
            central_arc(hull.jB, *bend, hull.jB.radius_exp, false);
        }
    }
    // leaf edges: unit exponent steps below the junction
    for (int i = 0; i < 4; ++i) {
        const HullJunction& j = hull.junction(hull.star ? 0 : hull.attach[i]);
        for (int k = 1; k <= samples_per_edge; ++k) {
            Rat e = j.radius_exp + Rat(k);
            TraceSample s;
            s.point = BerkPoint::disk(hull.leaf_center[i], e);
            s.edge = "leaf:" + hull.names[i];
            if (hull.leaf_depth[i] < e) {
                s.error = "leaf representative valid only to O(t^" +
                          rat_string(hull.leaf_depth[i]) + ")";
            } else {
                try {
                    s.multiplicity = multiplicity_at(F, G, s.point);
                } catch (const Error& ex) {
                    s.error = ex.what();
                }
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace berk
