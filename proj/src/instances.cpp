#include "berk/instances.hpp"

#include "berk/errors.hpp"
#include "berk/parse.hpp"

namespace berk {

CubicCoefficients tuple_from_free(const Series& a3, const Series& a2, const Series& b2) {
    CubicCoefficients c;
    c.a3 = a3;
    c.a2 = a2;
    c.b2 = b2;
    c.b1 = Rat(3) * a3 + Rat(2) * a2 - Rat(2) * b2;
    c.b0 = Rat(-2) * a3 - a2 + b2;
    return c;
}

namespace {

Instance make(const std::string& name, const std::string& a3, const std::string& a2,
              const std::string& b2, const std::string& path, std::optional<int> deep = {}) {
    Instance out;
    out.name = name;
    out.coeffs = tuple_from_free(parse_series(a3), parse_series(a2), parse_series(b2));
    out.intended = CaseLabel{path, deep};
    out.file_json = std::string("{\"coefficients\":{\"a3\":\"") + a3 + "\",\"a2\":\"" +
                    a2 + "\",\"b2\":\"" + out.coeffs.b2.str() + "\",\"b1\":\"" +
                    out.coeffs.b1.str() + "\",\"b0\":\"" + out.coeffs.b0.str() + "\"}}";
    return out;
}

Instance make_pq(const std::string& name, const std::string& p, const std::string& q, int deep,
                 const Rat& span) {
    Instance out;
    out.name = name;
    out.coeffs = from_pq(parse_series(p), parse_series(q), span);
    out.intended = CaseLabel{"2-2-2-2-1-1", deep};
    out.file_json = std::string("{\"pq\":{\"p\":\"") + p + "\",\"q\":\"" + q + "\"}}";
    return out;
}

}  // namespace

std::vector<Instance> taxonomy_instances(const Rat& span) {
    std::vector<Instance> out;
    out.push_back(make("1-1-1-1", "t", "-t-t^2", "1", "1-1-1-1"));
    out.push_back(make("1-1-1-2", "t", "-2*t", "1", "1-1-1-2"));
    out.push_back(make("1-1-2", "t^2", "t", "1", "1-1-2"));
    out.push_back(make("1-2-1-1-1", "t^2", "1+1/2*t-3/2*t^2", "1", "1-2-1-1-1"));
    out.push_back(make("1-2-1-1-2", "t", "1-2*t+1/2*t^3", "1", "1-2-1-1-2"));
    out.push_back(make("1-2-1-1-3", "t", "1-t", "1", "1-2-1-1-3"));
    {
        Instance empty;
        empty.name = "1-2-1-2";
        empty.intended = CaseLabel{"1-2-1-2", {}};
        empty.satisfiable = false;
        empty.note = "empty leaf: heart and club force b1bar = -a3bar - 2 b0bar = 0";
        out.push_back(std::move(empty));
    }
    out.push_back(make("1-2-2", "t", "3/2-3/2*t", "1", "1-2-2"));
    out.push_back(make("2-1-1", "1", "t", "2+t^2", "2-1-1"));
    out.push_back(make("2-1-2", "1", "t", "1", "2-1-2"));
    out.push_back(make("2-2-1-1", "1", "-2+t+t^2", "t", "2-2-1-1"));
    out.push_back(make("2-2-1-2-1", "1", "-1+t", "1", "2-2-1-2-1"));
    out.push_back(make("2-2-1-2-2", "1", "1+t", "3+t^2", "2-2-1-2-2"));
    out.push_back(make("2-2-2-1-1", "1", "-1+t", "t", "2-2-2-1-1"));
    out.push_back(make("2-2-2-1-2", "1", "1", "t", "2-2-2-1-2"));
    out.push_back(make("2-2-2-2-1-2a", "1", "-1+t", "3", "2-2-2-2-1-2"));
    out.push_back(make("2-2-2-2-1-2b", "1", "-2+t", "2+t^2", "2-2-2-2-1-2"));
    out.push_back(make("2-2-2-2-2", "1", "1", "1", "2-2-2-2-2"));
    out.push_back(make_pq("deep-1", "t^2", "t", 1, span));
    out.push_back(make_pq("deep-2", "t", "-t+t^2", 2, span));
    out.push_back(make_pq("deep-3", "t", "t^2", 3, span));
    out.push_back(make_pq("deep-4", "t", "1/2*t+t^2", 4, span));
    out.push_back(make_pq("deep-5", "t", "-4*t+t^3", 5, span));
    out.push_back(make_pq("deep-6", "t", "3*t+t^2", 6, span));
    return out;
}

Series random_series(std::mt19937& rng, int max_terms, long lattice_den) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> expnum(0, 4 * lattice_den);
    std::uniform_int_distribution<long> coef(-6, 6);
    Series s;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long c = coef(rng);
        if (c == 0) c = 1;
        s += Series::monomial(Rat(c), rat(expnum(rng), lattice_den));
    }
    return s;
}

CubicCoefficients random_valid_tuple(std::mt19937& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Series a3 = random_series(rng);
        Series a2 = random_series(rng);
        Series b2 = random_series(rng);
        if (!a3.has_terms() || !a2.has_terms() || !b2.has_terms()) continue;
        CubicCoefficients c = tuple_from_free(a3, a2, b2);
        if (!c.b0.has_terms() || !c.b1.has_terms()) continue;
        // normalize the minimum valuation to zero with a power of t
        Rat m = c.a3.val();
        for (const Series* s : {&c.a2, &c.b2, &c.b1, &c.b0}) m = rat_min(m, s->val());
        for (Series* s : {&c.a3, &c.a2, &c.b2, &c.b1, &c.b0}) *s = s->shifted(-m);
        if (!validate(c).valid()) continue;
        return c;
    }
    throw Error("random tuple generation failed");
}

}  // namespace berk
