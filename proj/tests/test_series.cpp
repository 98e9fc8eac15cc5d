#include <doctest.h>

#include <random>

#include "berk/errors.hpp"
#include "berk/parse.hpp"
#include "berk/series.hpp"

using namespace berk;

namespace {

Series random_exact(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<long> exp(-4, 8);
    Series s;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long c = num(rng);
        if (c == 0) continue;
        s += Series::monomial(rat(c, den(rng)), rat(exp(rng), den(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    Series one = Series::from_rat(Rat(1));
    Series t = Series::t_pow(Rat(1));

    Series prod = (one + t) * (one - t);
    CHECK(prod == one - t * t);
    CHECK(prod.is_exact());

    Series geo = Series::div(one, one - t, Rat(5));
    CHECK(geo.str() == "1 + t + t^2 + t^3 + t^4 + O(t^5)");

    Series s = Series::t_pow(rat(1, 2)) + t;
    CHECK(s.coeff_at(rat(1, 2)) == 1);
    CHECK(s.coeff_at(Rat(1)) == 1);
    CHECK(s.terms().size() == 2);
}

TEST_CASE("division is exact when it terminates") {
    Series one = Series::from_rat(Rat(1));
    Series t = Series::t_pow(Rat(1));
    Series q = Series::div(one - t * t, one - t, Rat(48));
    CHECK(q == one + t);
    CHECK(q.is_exact());

    CHECK_THROWS_AS(Series::div(one, Series::zero(), Rat(8)), DivisionByZero);
    CHECK_THROWS_AS(Series::div(one, Series::zero_to(Rat(3)), Rat(8)), IndeterminateZero);
}

TEST_CASE("valuation") {
    CHECK((Series::from_rat(Rat(2)) + Series::t_pow(Rat(1))).val() == 0);
    CHECK(!Series::zero().valuation_or_inf().has_value());  // exact zero: +infinity

    Series cancel = Series::monomial(Rat(3), Rat(2)) - Series::monomial(Rat(3), Rat(2));
    CHECK(cancel.is_exact_zero());
    CHECK(!cancel.valuation_or_inf().has_value());

    CHECK_THROWS_AS(Series::zero_to(Rat(5)).val(), IndeterminateValuation);
}

TEST_CASE("residue") {
    Series one = Series::from_rat(Rat(1));
    Series t = Series::t_pow(Rat(1));
    CHECK((one + t).residue() == 1);
    CHECK(Series::t_pow(rat(3, 2)).residue() == 0);
    CHECK_THROWS_AS(Series::t_pow(Rat(-1)).residue(), NotIntegral);
    // residue(x) = 0 iff v(x) > 0
    CHECK((t + t * t).residue() == 0);
}

TEST_CASE("series literal grammar") {
    Series s = parse_series("1 - 2*t + t^(3/2)");
    CHECK(s.coeff_at(Rat(0)) == 1);
    CHECK(s.coeff_at(Rat(1)) == -2);
    CHECK(s.coeff_at(rat(3, 2)) == 1);
    CHECK(s.is_exact());

    Series m = parse_series("3/4*t^(-1)");
    CHECK(m.terms().size() == 1);
    CHECK(m.coeff_at(Rat(-1)) == rat(3, 4));

    try {
        parse_series("t^");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("literal round-trip") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Series s = random_exact(rng);
        if (s.is_exact_zero()) continue;
        CHECK(parse_series(s.str()) == s);
    }
}

TEST_CASE("ultrametric inequality") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        Series x = random_exact(rng), y = random_exact(rng);
        auto vx = x.is_exact_zero() ? std::optional<Rat>{} : std::optional<Rat>{x.val()};
        auto vy = y.is_exact_zero() ? std::optional<Rat>{} : std::optional<Rat>{y.val()};
        Series s = x + y;
        auto vs = s.is_exact_zero() ? std::optional<Rat>{} : std::optional<Rat>{s.val()};
        if (!vx && !vy) {
            CHECK(!vs);
            continue;
        }
        std::optional<Rat> lo;
        if (vx && vy) lo = rat_min(*vx, *vy);
        else lo = vx ? vx : vy;
        if (vs) CHECK(*vs >= *lo);
        if (vx && vy && *vx != *vy) {
            REQUIRE(vs.has_value());
            CHECK(*vs == *lo);  // equality when valuations differ
        }
    }
}

TEST_CASE("multiplicativity of the valuation") {
    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
        Series x = random_exact(rng), y = random_exact(rng);
        if (x.is_exact_zero() || y.is_exact_zero()) continue;
        CHECK((x * y).val() == x.val() + y.val());
        CHECK((x * y).leading_coeff() == x.leading_coeff() * y.leading_coeff());
    }
}

TEST_CASE("div then mul round-trips within precision") {
    std::mt19937 rng(17);
    for (int i = 0; i < 120; ++i) {
        Series x = random_exact(rng), y = random_exact(rng);
        if (x.is_exact_zero() || y.is_exact_zero()) continue;
        Series q = Series::div(x, y, Rat(24));
        Series back = q * y - x;
        if (back.is_exact_zero()) continue;
        if (back.has_terms()) {
            CHECK(back.val() >= x.val() + 24);
        } else {
            CHECK(back.precision().bound >= x.val() + 24);
        }
    }
}

TEST_CASE("precision propagation") {
    Series t = Series::t_pow(Rat(1));
    Series a = (Series::from_rat(Rat(1)) + t).truncated(Rat(3));
    CHECK(a.precision().finite);
    CHECK(a.precision().bound == 3);
    Series b = a * Series::t_pow(Rat(2));
    CHECK(b.precision().bound == 5);
    // adding something known more precisely cannot improve the bound
    Series c = b + Series::t_pow(Rat(10));
    CHECK(c.precision().bound == 5);
    // zero-to-precision stays a distinct state
    Series z = a - a;
    CHECK(z.is_zero_to_precision());
    CHECK_FALSE(z.is_exact_zero());
}
