#include "monlef/ideal.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "monlef/util.hpp"

namespace monlef {

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("need at least one variable");
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens)
    : MonomialIdeal(n) {
    for (const Monomial& g : gens)
        if (g.vars() != n)
            throw std::invalid_argument("generator has wrong variable count");
    // Dedup, then drop anything divisible by another generator.
    std::sort(gens.begin(), gens.end(), GrlexGreater{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : gens) {
            if (h == g)
                continue;
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            minimal.push_back(g);
    }
    gens_ = std::move(minimal);
}

MonomialIdeal MonomialIdeal::unit(int n) {
    return MonomialIdeal(n, {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
    return MonomialIdeal(m.vars(), {m});
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_[0].is_one();
}

MonomialIdeal minimalize(std::vector<Monomial> gens, int n) {
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars())
        throw std::invalid_argument("ideals live in different rings");
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m) {
    if (I.vars() != m.vars())
        throw std::invalid_argument("monomial lives in a different ring");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const Monomial& g : I.gens())
        gens.push_back(g.colon(m));
    return MonomialIdeal(I.vars(), std::move(gens));
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    if (I.vars() != m.vars())
        throw std::invalid_argument("monomial lives in a different ring");
    return std::any_of(I.gens().begin(), I.gens().end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

namespace {

bool is_pure_power(const Monomial& m, int var) {
    if (m.exponent(var) == 0)
        return false;
    for (int i = 0; i < m.vars(); ++i)
        if (i != var && m.exponent(i) != 0)
            return false;
    return true;
}

} // namespace

bool is_artinian(const MonomialIdeal& I) {
    if (I.is_unit())
        return true;
    for (int v = 0; v < I.vars(); ++v) {
        bool found = false;
        for (const Monomial& g : I.gens()) {
            if (is_pure_power(g, v)) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

std::vector<Exponent> artinian_caps(const MonomialIdeal& I) {
    if (!is_artinian(I) || I.is_unit())
        throw std::invalid_argument("proper Artinian ideal required");
    std::vector<Exponent> caps((std::size_t)I.vars(),
                               std::numeric_limits<Exponent>::max());
    for (int v = 0; v < I.vars(); ++v)
        for (const Monomial& g : I.gens())
            if (is_pure_power(g, v))
                caps[(std::size_t)v] =
                    std::min(caps[(std::size_t)v], g.exponent(v));
    return caps;
}

Exponent socle_bound(const MonomialIdeal& I) {
    Exponent bound = 0;
    for (Exponent cap : artinian_caps(I))
        bound = checked_add(bound, cap - 1);
    return bound;
}

namespace {

// Emits exponent vectors of the given total degree, respecting per-variable
// caps, in lex-descending order (the canonical order within one degree).
void enumerate_rec(const std::vector<Exponent>& caps, std::size_t var,
                   Exponent remaining, std::vector<Exponent>& current,
                   const MonomialIdeal& I, std::vector<Monomial>& out) {
    if (var + 1 == caps.size()) {
        if (remaining >= caps[var])
            return;
        current[var] = remaining;
        Monomial m(current);
        if (!contains(I, m))
            out.push_back(m);
        return;
    }
    Exponent top = std::min(remaining, caps[var] - 1);
    for (Exponent e = top; e >= 0; --e) {
        current[var] = e;
        enumerate_rec(caps, var + 1, remaining - e, current, I, out);
    }
}

} // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& I, Exponent i) {
    if (i < 0)
        return {};
    if (I.is_unit())
        return {};
    if (!is_artinian(I))
        throw std::invalid_argument("standard monomials need an Artinian ideal");
    std::vector<Exponent> caps = artinian_caps(I);
    std::vector<Monomial> out;
    std::vector<Exponent> current(caps.size(), 0);
    enumerate_rec(caps, 0, i, current, I, out);
    return out;
}

HilbertData hilbert_data(const MonomialIdeal& I) {
    if (I.is_unit())
        throw std::invalid_argument("Hilbert data of the zero algebra");
    if (!is_artinian(I))
        throw std::invalid_argument("Hilbert data needs an Artinian ideal");
    Exponent bound = socle_bound(I);
    HilbertData h;
    for (Exponent i = 0; i <= bound + 1; ++i) {
        long long count = (long long)standard_monomials(I, i).size();
        if (count == 0)
            break;
        h.values.push_back(count);
    }
    h.socle_degree = (long long)h.values.size() - 1;
    h.symmetric = true;
    for (std::size_t i = 0; i < h.values.size(); ++i)
        if (h.values[i] != h.values[h.values.size() - 1 - i]) {
            h.symmetric = false;
            break;
        }
    h.unimodal = true;
    bool falling = false;
    for (std::size_t i = 0; i + 1 < h.values.size(); ++i) {
        if (h.values[i + 1] < h.values[i])
            falling = true;
        else if (falling && h.values[i + 1] > h.values[i]) {
            h.unimodal = false;
            break;
        }
    }
    return h;
}

bool verify_split(const MonomialIdeal& K, const Monomial& m) {
    if (!is_artinian(K) || K.is_unit())
        throw std::invalid_argument("verify_split needs a proper Artinian ideal");
    MonomialIdeal I = add(K, MonomialIdeal::principal(m));
    MonomialIdeal J = colon_by_monomial(K, m);
    Exponent bound = checked_add(socle_bound(K), m.degree());
    for (Exponent t = 0; t <= bound; ++t) {
        std::vector<Monomial> expected = standard_monomials(K, t);
        std::vector<Monomial> got = standard_monomials(I, t);
        for (const Monomial& u : standard_monomials(J, t - m.degree()))
            got.push_back(u * m);
        // expected is duplicate-free, so equality also certifies disjointness.
        std::sort(got.begin(), got.end(), GrlexGreater{});
        if (got != expected)
            return false;
    }
    return true;
}

std::string render_ideal(const MonomialIdeal& I) {
    if (I.is_zero())
        return "0";
    std::string out;
    for (const Monomial& g : I.gens()) {
        if (!out.empty())
            out += ", ";
        out += render_monomial(g);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
    return os << "(" << render_ideal(I) << ")";
}

} // namespace monlef
