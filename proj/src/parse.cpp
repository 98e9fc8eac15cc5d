#include "berk/parse.hpp"

#include <cctype>

#include "berk/errors.hpp"

namespace berk {
namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

mpz_class parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    std::string digits;
    if (c.pos < c.s.size() && c.s[c.pos] == '-') {
        digits += '-';
        ++c.pos;
    }
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        digits += c.s[c.pos];
        ++c.pos;
    }
    if (digits.empty() || digits == "-") throw SyntaxError("expected integer", start);
    return mpz_class(digits);
}

Rat parse_rat(Cursor& c) {
    mpz_class num = parse_int(c);
    mpz_class den = 1;
    if (c.accept('/')) {
        std::size_t at = c.pos;
        den = parse_int(c);
        if (den <= 0) throw SyntaxError("denominator must be positive", at);
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// tpow := 't' ('^' exp)?
Rat parse_tpow(Cursor& c) {
    if (!c.accept('t')) throw SyntaxError("expected 't'", c.pos);
    if (!c.accept('^')) return Rat(1);
    if (c.accept('(')) {
        Rat e = parse_rat(c);
        if (!c.accept(')')) throw SyntaxError("expected ')'", c.pos);
        return e;
    }
    return parse_rat(c);
}

Series parse_term(Cursor& c) {
    char ch = c.peek();
    if (ch == 't') {
        return Series::t_pow(parse_tpow(c));
    }
    if (ch == '-') {
        // '-t^...' as a shorthand for '-1*t^...'
        std::size_t save = c.pos;
        ++c.pos;
        if (c.peek() == 't') return Series::t_pow(parse_tpow(c)).scaled(Rat(-1));
        c.pos = save;
    }
    Rat coeff = parse_rat(c);
    if (c.accept('*')) {
        return Series::monomial(coeff, parse_tpow(c));
    }
    return Series::from_rat(coeff);
}

}  // namespace

Series parse_series(const std::string& text) {
    Cursor c{text};
    if (c.eof()) throw SyntaxError("empty series literal", 0);
    Series out = parse_term(c);
    while (!c.eof()) {
        c.skip_ws();
        char op = c.s[c.pos];
        if (op != '+' && op != '-') throw SyntaxError("expected '+' or '-'", c.pos);
        ++c.pos;
        Series term = parse_term(c);
        out = (op == '+') ? out + term : out - term;
    }
    return out;
}

}  // namespace berk
