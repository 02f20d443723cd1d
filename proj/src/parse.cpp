#include "monlef/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "monlef/errors.hpp"
#include "monlef/util.hpp"

namespace monlef {

namespace {

// Exponent vectors are first collected sparsely as (variable index, exponent)
// pairs; the ambient variable count is only fixed once the whole input has
// been read.
struct SparseMonomial {
    std::vector<std::pair<int, Exponent>> factors; // 0-based indices
    bool explicit_one = false;
};

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace((unsigned char)text[pos]))
            ++pos;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw parse_error(message, pos);
    }
};

long long parse_uint(Cursor& c) {
    if (!std::isdigit((unsigned char)c.peek()))
        c.fail("expected a digit");
    long long value = 0;
    while (std::isdigit((unsigned char)c.peek())) {
        value = checked_mul(value, 10);
        value = checked_add(value, c.text[c.pos] - '0');
        ++c.pos;
    }
    return value;
}

// var := 'x' digits | 'x' | 'y' | 'z' | 'w'   (aliases map to indices 0..3)
int parse_var(Cursor& c) {
    char v = c.peek();
    if (v == 'x') {
        ++c.pos;
        if (std::isdigit((unsigned char)c.peek())) {
            long long idx = parse_uint(c);
            if (idx < 1)
                c.fail("variable index must be at least 1");
            return (int)(idx - 1);
        }
        return 0;
    }
    if (v == 'y' || v == 'z' || v == 'w') {
        ++c.pos;
        return v == 'y' ? 1 : v == 'z' ? 2 : 3;
    }
    c.fail("expected a variable");
}

// monomial := '1' | factor (ws '*'? ws factor)*
SparseMonomial parse_sparse_monomial(Cursor& c) {
    SparseMonomial m;
    c.skip_ws();
    if (c.peek() == '1') {
        ++c.pos;
        m.explicit_one = true;
        return m;
    }
    for (;;) {
        int var = parse_var(c);
        Exponent e = 1;
        if (c.peek() == '^') {
            ++c.pos;
            if (c.peek() == '^')
                c.fail("repeated '^'");
            e = parse_uint(c);
        }
        m.factors.emplace_back(var, e);
        std::size_t mark = c.pos;
        c.skip_ws();
        if (c.peek() == '*') {
            ++c.pos;
            c.skip_ws();
            continue;
        }
        char next = c.peek();
        if (next == 'x' || next == 'y' || next == 'z' || next == 'w')
            continue; // juxtaposition, e.g. x^2y
        c.pos = mark;
        return m;
    }
}

int infer_vars(const std::vector<SparseMonomial>& monomials,
               std::optional<int> n_override, const Cursor& c) {
    int max_index = -1;
    for (const SparseMonomial& m : monomials)
        for (const auto& [var, e] : m.factors)
            max_index = std::max(max_index, var);
    int n = max_index + 1;
    if (n_override) {
        if (*n_override < std::max(n, 1))
            throw parse_error("variable count override too small for input",
                              c.text.size());
        return *n_override;
    }
    if (n == 0)
        throw parse_error("cannot infer the variable count; pass it explicitly",
                          c.text.size());
    return n;
}

Monomial densify(const SparseMonomial& m, int n) {
    std::vector<Exponent> exps((std::size_t)n, 0);
    for (const auto& [var, e] : m.factors)
        exps[(std::size_t)var] = checked_add(exps[(std::size_t)var], e);
    return Monomial(std::move(exps));
}

} // namespace

MonomialIdeal parse_ideal(const std::string& text,
                          std::optional<int> n_override) {
    Cursor c{text};
    std::vector<SparseMonomial> monomials;
    c.skip_ws();
    if (!c.done() && c.peek() == '0') {
        ++c.pos;
        c.skip_ws();
        if (!c.done())
            c.fail("unexpected input after the zero ideal");
        if (!n_override)
            c.fail("the zero ideal needs an explicit variable count");
        return MonomialIdeal::zero(*n_override);
    }
    if (!c.done()) {
        for (;;) {
            monomials.push_back(parse_sparse_monomial(c));
            c.skip_ws();
            if (c.peek() == ',') {
                ++c.pos;
                continue;
            }
            break;
        }
        if (!c.done())
            c.fail("unexpected character");
    }
    if (monomials.empty()) {
        if (!n_override)
            throw parse_error("empty ideal needs an explicit variable count",
                              0);
        return MonomialIdeal::zero(*n_override);
    }
    int n = infer_vars(monomials, n_override, c);
    std::vector<Monomial> gens;
    gens.reserve(monomials.size());
    for (const SparseMonomial& m : monomials)
        gens.push_back(densify(m, n));
    return MonomialIdeal(n, std::move(gens));
}

Monomial parse_monomial(const std::string& text,
                        std::optional<int> n_override) {
    Cursor c{text};
    SparseMonomial m = parse_sparse_monomial(c);
    c.skip_ws();
    if (!c.done())
        c.fail("unexpected character");
    int n = m.factors.empty() ? n_override.value_or(1)
                              : infer_vars({m}, n_override, c);
    return densify(m, n);
}

Polynomial parse_polynomial(const std::string& text,
                            std::optional<int> n_override) {
    Cursor c{text};
    struct RawTerm {
        Rational coeff;
        SparseMonomial mono;
    };
    std::vector<RawTerm> raw;
    c.skip_ws();
    bool first = true;
    while (!c.done()) {
        Rational sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            ++c.pos;
            c.skip_ws();
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        Rational coeff = sign;
        bool have_coeff = false;
        bool want_mono = false;
        if (std::isdigit((unsigned char)c.peek())) {
            long long num = parse_uint(c);
            if (c.peek() == '/') {
                ++c.pos;
                long long den = parse_uint(c);
                if (den == 0)
                    c.fail("zero denominator");
                coeff *= Rational((long)num, (long)den);
                coeff.canonicalize();
            } else {
                coeff *= Rational((long)num);
            }
            have_coeff = true;
            c.skip_ws();
            if (c.peek() == '*') {
                ++c.pos;
                c.skip_ws();
                want_mono = true;
            }
        }
        SparseMonomial mono;
        char next = c.peek();
        if (next == 'x' || next == 'y' || next == 'z' || next == 'w') {
            mono = parse_sparse_monomial(c);
        } else if (want_mono || !have_coeff) {
            c.fail("expected a term");
        }
        raw.push_back({coeff, mono});
        first = false;
        c.skip_ws();
    }
    if (raw.empty())
        throw parse_error("empty polynomial", 0);
    std::vector<SparseMonomial> just_monos;
    for (const RawTerm& t : raw)
        just_monos.push_back(t.mono);
    int n = infer_vars(just_monos, n_override, c);
    std::vector<Term> terms;
    for (const RawTerm& t : raw)
        terms.push_back({t.coeff, densify(t.mono, n)});
    return Polynomial(std::move(terms));
}

} // namespace monlef
