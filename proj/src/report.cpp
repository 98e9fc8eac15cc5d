#include "berk/report.hpp"

#include <sstream>

#include "berk/errors.hpp"
#include "berk/parse.hpp"

namespace berk {

namespace {

std::string exact_part_literal(const Series& s) {
    if (!s.has_terms()) return "0";
    Series e = s.with_precision(Prec::inf());
    return e.str();
}

Rat rat_from_json(const json& j) {
    auto r = rat_parse(j.get<std::string>());
    if (!r) throw Error("bad rational in JSON: " + j.get<std::string>());
    return *r;
}

}  // namespace

json series_to_json(const Series& s) {
    json j;
    j["terms"] = exact_part_literal(s);
    if (s.precision().finite) j["precision"] = rat_string(s.precision().bound);
    return j;
}

Series series_from_json(const json& j) {
    if (j.is_string()) {
        return parse_series(j.get<std::string>());
    }
    std::string lit = j.at("terms").get<std::string>();
    Series s = lit == "0" ? Series::zero() : parse_series(lit);
    if (j.contains("precision")) s = s.with_precision(Prec::at(rat_from_json(j["precision"])));
    return s;
}

json berkpoint_to_json(const BerkPoint& p) {
    json j;
    switch (p.kind) {
        case BerkPoint::Kind::Infinity:
            j["type"] = "classical";
            j["value"] = "inf";
            break;
        case BerkPoint::Kind::Classical:
            j["type"] = "classical";
            j["value"] = exact_part_literal(p.value);
            break;
        case BerkPoint::Kind::Disk:
            j["type"] = "disk";
            j["center"] = exact_part_literal(p.value);
            j["radius_exp"] = rat_string(p.radius_exp);
            break;
    }
    return j;
}

BerkPoint berkpoint_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "classical") {
        std::string v = j.at("value").get<std::string>();
        if (v == "inf") return BerkPoint::infinity();
        return BerkPoint::classical(parse_series(v));
    }
    if (type == "disk") {
        return BerkPoint::disk(parse_series(j.at("center").get<std::string>()),
                               rat_from_json(j.at("radius_exp")));
    }
    throw Error("unknown BerkPoint type " + type);
}

json hull_to_json(const HullTree& h) {
    json j;
    json leaves = json::array();
    for (int i = 0; i < 4; ++i) {
        json l;
        l["name"] = h.names[i];
        l["center"] = series_to_json(h.leaf_center[i]);
        l["depth"] = rat_string(h.leaf_depth[i]);
        l["exact"] = h.leaf_exact[i];
        leaves.push_back(std::move(l));
    }
    j["leaves"] = std::move(leaves);
    j["star"] = h.star;
    auto junc = [&](const HullJunction& x) {
        json o;
        o["center"] = series_to_json(x.center);
        o["radius_exp"] = rat_string(x.radius_exp);
        o["validity_depth"] = rat_string(x.validity_depth);
        return o;
    };
    j["junctions"] = json::array({junc(h.jA)});
    if (!h.star) {
        j["junctions"].push_back(junc(h.jB));
        j["pairing"] = json::array({json::array({h.names[h.pairA[0]], h.names[h.pairA[1]]}),
                                    json::array({h.names[h.pairB[0]], h.names[h.pairB[1]]})});
        j["attach"] = h.attach;
    }
    json pw = json::array();
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k)
            pw.push_back(json::array({i, k, rat_string(h.pairwise[i][k])}));
    j["pairwise"] = std::move(pw);
    return j;
}

HullTree hull_from_json(const json& j) {
    HullTree h;
    int i = 0;
    for (const auto& l : j.at("leaves")) {
        h.names[i] = l.at("name").get<std::string>();
        h.leaf_center[i] = series_from_json(l.at("center"));
        h.leaf_depth[i] = rat_from_json(l.at("depth"));
        h.leaf_exact[i] = l.at("exact").get<bool>();
        ++i;
    }
    h.star = j.at("star").get<bool>();
    auto junc = [&](const json& o) {
        HullJunction x;
        x.center = series_from_json(o.at("center"));
        x.radius_exp = rat_from_json(o.at("radius_exp"));
        x.validity_depth = rat_from_json(o.at("validity_depth"));
        return x;
    };
    h.jA = junc(j.at("junctions")[0]);
    h.jB = h.star ? h.jA : junc(j.at("junctions")[1]);
    if (!h.star) {
        auto find_leaf = [&](const std::string& n) {
            for (int k = 0; k < 4; ++k)
                if (h.names[k] == n) return k;
            throw Error("unknown leaf " + n);
        };
        h.pairA = {find_leaf(j.at("pairing")[0][0]), find_leaf(j.at("pairing")[0][1])};
        h.pairB = {find_leaf(j.at("pairing")[1][0]), find_leaf(j.at("pairing")[1][1])};
        h.attach = j.at("attach").get<std::array<int, 4>>();
    } else {
        h.attach = {0, 0, 0, 0};
    }
    for (const auto& e : j.at("pairwise")) {
        int a = e[0].get<int>(), b = e[1].get<int>();
        h.pairwise[a][b] = h.pairwise[b][a] = rat_from_json(e[2]);
    }
    return h;
}

json label_to_json(const CaseLabel& l) {
    json j;
    j["case"] = l.path;
    if (l.deep_subcase) j["deep_subcase"] = *l.deep_subcase;
    return j;
}

CaseLabel label_from_json(const json& j) {
    CaseLabel l;
    l.path = j.at("case").get<std::string>();
    if (j.contains("deep_subcase")) l.deep_subcase = j["deep_subcase"].get<int>();
    return l;
}

json locus_to_json(const LocusDescription& d) {
    json j = label_to_json(d.label);
    j["shape"] = d.connected ? "connected" : "two_components";
    j["hull"] = hull_to_json(d.hull);
    if (!d.connected) {
        json segs = json::array();
        for (int k = 0; k < 2; ++k) {
            json s;
            s["endpoints"] =
                json::array({d.hull.names[d.segments[k][0]], d.hull.names[d.segments[k][1]]});
            s["junction_exp"] = rat_string(d.segment_exp[k]);
            segs.push_back(std::move(s));
        }
        j["segments"] = std::move(segs);
    }
    if (!d.figure_tag.empty()) j["figure"] = d.figure_tag;
    return j;
}

LocusDescription locus_from_json(const json& j) {
    LocusDescription d;
    d.label = label_from_json(j);
    d.connected = j.at("shape").get<std::string>() == "connected";
    d.hull = hull_from_json(j.at("hull"));
    if (!d.connected) {
        auto find_leaf = [&](const std::string& n) {
            for (int k = 0; k < 4; ++k)
                if (d.hull.names[k] == n) return k;
            throw Error("unknown leaf " + n);
        };
        int k = 0;
        for (const auto& s : j.at("segments")) {
            d.segments[k] = {find_leaf(s.at("endpoints")[0]), find_leaf(s.at("endpoints")[1])};
            d.segment_exp[k] = rat_from_json(s.at("junction_exp"));
            ++k;
        }
    }
    if (j.contains("figure")) d.figure_tag = j["figure"].get<std::string>();
    return d;
}

json roots_to_json(const CriticalPair& p) {
    auto one = [&](const RootDescriptor& r) {
        json j;
        j["v"] = rat_string(r.v);
        j["v_one_minus"] = rat_string(r.v_one_minus);
        j["rep"] = series_to_json(r.rep);
        j["rep_depth"] = rat_string(r.rep_depth);
        if (r.lifted) j["lifted"] = series_to_json(*r.lifted);
        if (!r.note.empty()) j["note"] = r.note;
        return j;
    };
    json j;
    j["c1"] = one(p.c1);
    j["c2"] = one(p.c2);
    j["v_diff"] = rat_string(p.v_diff);
    return j;
}

CriticalPair roots_from_json(const json& j) {
    auto one = [&](const json& o) {
        RootDescriptor r;
        r.v = rat_from_json(o.at("v"));
        r.v_one_minus = rat_from_json(o.at("v_one_minus"));
        r.rep = series_from_json(o.at("rep"));
        r.rep_depth = rat_from_json(o.at("rep_depth"));
        if (o.contains("lifted")) r.lifted = series_from_json(o["lifted"]);
        if (o.contains("note")) r.note = o["note"].get<std::string>();
        return r;
    };
    CriticalPair p;
    p.c1 = one(j.at("c1"));
    p.c2 = one(j.at("c2"));
    p.v_diff = rat_from_json(j.at("v_diff"));
    return p;
}

json cross_to_json(const CrossReport& r) {
    json j = label_to_json(r.label);
    if (r.symbolic)
        j["symbolic"] = locus_to_json(*r.symbolic);
    else
        j["symbolic"] = json{{"error", r.symbolic_error}};
    j["oracle"] = locus_to_json(r.oracle);
    json bullets;
    bullets["connected"] = r.bullets.connected;
    bullets["two_segments"] = r.bullets.two_segments;
    j["theorem1_bullets"] = std::move(bullets);
    if (!r.bullets.connected.empty() && r.bullets.two_segments.empty())
        j["theorem1_bullet"] = r.bullets.connected.front();
    else if (r.bullets.connected.empty() && !r.bullets.two_segments.empty())
        j["theorem1_bullet"] = r.bullets.two_segments.front();
    j["agreement"] = r.agreement;
    j["notes"] = r.notes;
    return j;
}

json sample_to_json(const TraceSample& s) {
    json j;
    j["point"] = berkpoint_to_json(s.point);
    j["edge"] = s.edge;
    if (s.multiplicity) j["multiplicity"] = *s.multiplicity;
    if (!s.error.empty()) j["error"] = s.error;
    j["interior_central"] = s.interior_central;
    return j;
}

TraceSample sample_from_json(const json& j) {
    TraceSample s;
    s.point = berkpoint_from_json(j.at("point"));
    s.edge = j.at("edge").get<std::string>();
    if (j.contains("multiplicity")) s.multiplicity = j["multiplicity"].get<int>();
    if (j.contains("error")) s.error = j["error"].get<std::string>();
    s.interior_central = j.at("interior_central").get<bool>();
    return s;
}

json locus_report_to_json(const LocusReport& r) {
    json j = label_to_json(r.label);
    j["mode"] = r.mode;
    j["locus"] = locus_to_json(r.locus);
    j["roots"] = roots_to_json(r.roots);
    json samples = json::array();
    for (const auto& s : r.samples) samples.push_back(sample_to_json(s));
    j["samples"] = std::move(samples);
    if (r.cross) j["cross_check"] = cross_to_json(*r.cross);
    return j;
}

LocusReport locus_report_from_json(const json& j) {
    LocusReport r;
    r.label = label_from_json(j);
    r.mode = j.at("mode").get<std::string>();
    r.locus = locus_from_json(j.at("locus"));
    r.roots = roots_from_json(j.at("roots"));
    for (const auto& s : j.at("samples")) r.samples.push_back(sample_from_json(s));
    // cross_check is emitted for --mode both; not needed for round-trip use
    return r;
}

InstanceFile load_instance(const json& j) {
    InstanceFile out;
    if (j.contains("precision")) out.working_span = Rat(j["precision"].get<long>());
    int sources = int(j.contains("coefficients")) + int(j.contains("critical_data")) +
                  int(j.contains("pq"));
    if (sources != 1)
        throw Error("instance file must contain exactly one of coefficients, critical_data, pq");
    if (j.contains("coefficients")) {
        const json& c = j["coefficients"];
        out.coeffs.a3 = parse_series(c.at("a3").get<std::string>());
        out.coeffs.a2 = parse_series(c.at("a2").get<std::string>());
        out.coeffs.b2 = parse_series(c.at("b2").get<std::string>());
        out.coeffs.b1 = parse_series(c.at("b1").get<std::string>());
        out.coeffs.b0 = parse_series(c.at("b0").get<std::string>());
    } else if (j.contains("critical_data")) {
        const json& c = j["critical_data"];
        CriticalData d;
        d.alpha = parse_series(c.at("alpha").get<std::string>());
        d.beta = parse_series(c.at("beta").get<std::string>());
        d.gamma = parse_series(c.at("gamma").get<std::string>());
        out.coeffs = from_critical_data(d);
    } else {
        const json& c = j["pq"];
        out.coeffs = from_pq(parse_series(c.at("p").get<std::string>()),
                             parse_series(c.at("q").get<std::string>()), out.working_span);
    }
    return out;
}

std::string locus_to_dot(const LocusDescription& d) {
    const HullTree& h = d.hull;
    std::ostringstream os;
    os << "graph locus {\n";
    os << "  // case " << d.label.str() << (d.connected ? " connected" : " two components");
    if (!d.figure_tag.empty()) os << " (" << d.figure_tag << ")";
    os << "\n";
    for (int i = 0; i < 4; ++i)
        os << "  \"" << h.names[i] << "\" [shape=circle];\n";
    os << "  \"inf\" [shape=circle];\n";
    os << "  \"jA\" [shape=point, xlabel=\"r=" << rat_string(h.jA.radius_exp) << "\"];\n";
    if (!h.star)
        os << "  \"jB\" [shape=point, xlabel=\"r=" << rat_string(h.jB.radius_exp) << "\"];\n";

    auto edge = [&](const std::string& a, const std::string& b, bool bold,
                    const std::string& label = "") {
        os << "  \"" << a << "\" -- \"" << b << "\"";
        std::string attrs;
        if (bold) attrs += "style=bold,penwidth=2";
        if (!label.empty()) {
            if (!attrs.empty()) attrs += ",";
            attrs += "label=\"" + label + "\"";
        }
        if (!attrs.empty()) os << " [" << attrs << "]";
        os << ";\n";
    };

    auto in_pair = [&](int leaf, int seg) {
        return d.segments[seg][0] == leaf || d.segments[seg][1] == leaf;
    };
    for (int i = 0; i < 4; ++i) {
        std::string j = (h.star || h.attach[i] == 0) ? "jA" : "jB";
        bool bold = d.connected || in_pair(i, 0) || in_pair(i, 1);
        edge(h.names[i], j, bold);
    }
    if (!h.star) {
        // the central edge is in the locus only for connected verdicts; when
        // it dips through the join of the junction centers, show the bend
        std::optional<Rat> bend;
        try {
            bend = central_bend_exp(h);
        } catch (const Error&) {
        }
        if (bend) {
            os << "  \"bend\" [shape=point, xlabel=\"r=" << rat_string(*bend) << "\"];\n";
            edge("jA", "bend", d.connected, "central");
            edge("bend", "jB", d.connected);
        } else {
            edge("jA", "jB", d.connected, "central");
        }
    }
    // path to infinity: attach at the shallowest junction; never in the locus
    std::string top = "jA";
    if (!h.star && h.jB.radius_exp < h.jA.radius_exp) top = "jB";
    edge("inf", top, false);
    os << "}\n";
    return os.str();
}

}  // namespace berk
