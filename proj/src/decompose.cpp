#include "monlef/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "monlef/errors.hpp"
#include "monlef/util.hpp"

namespace monlef {

Decomposition split(const MonomialIdeal& K, const Monomial& m) {
    if (!K.is_proper())
        throw std::invalid_argument("split needs a proper ideal");
    return Decomposition{K, m, add(K, MonomialIdeal::principal(m)),
                         colon_by_monomial(K, m)};
}

namespace {

// Hilbert values of R/I with unit quotients treated as the zero algebra;
// out-of-range degrees give zero.
struct HilbertValues {
    std::vector<long long> values;

    explicit HilbertValues(const MonomialIdeal& I) {
        if (!I.is_unit())
            values = hilbert_data(I).values;
    }
    long long at(Exponent i) const {
        if (i < 0 || i >= (Exponent)values.size())
            return 0;
        return values[(std::size_t)i];
    }
    Exponent socle() const { return (Exponent)values.size() - 1; }
};

} // namespace

bool hilbert_compatible(const MonomialIdeal& K, const Monomial& m,
                        Exponent d) {
    if (d < 1)
        throw std::invalid_argument("hilbert_compatible needs d >= 1");
    Decomposition dec = split(K, m);
    HilbertValues hi(dec.I), hj(dec.J);
    const Exponent shift = m.degree();
    for (Exponent i = 0; i <= hi.socle(); ++i) {
        if (hi.at(i) < hi.at(i + d) && !(hj.at(i - shift) <= hj.at(i - shift + d)))
            return false;
        if (hi.at(i) > hi.at(i + d) && !(hj.at(i - shift) >= hj.at(i - shift + d)))
            return false;
    }
    return true;
}

bool centre_to_centre(const MonomialIdeal& K, const Monomial& m) {
    Decomposition dec = split(K, m);
    if (dec.I.is_unit() || dec.J.is_unit())
        throw inapplicable_error(
            "centre-to-centre test needs proper I = K+(m) and J = K:(m)");
    HilbertData hi = hilbert_data(dec.I);
    HilbertData hj = hilbert_data(dec.J);
    if (!hi.symmetric || !hj.symmetric)
        return false;
    return hi.socle_degree - hj.socle_degree == 2 * m.degree();
}

std::optional<Decomposition> find_witness(const MonomialIdeal& K,
                                          std::optional<Exponent> single_d) {
    if (!is_artinian(K) || K.is_unit())
        throw std::invalid_argument("witness search needs a proper Artinian ideal");
    const Exponent socle = hilbert_data(K).socle_degree;
    for (Exponent deg = 1; deg <= socle; ++deg) {
        for (const Monomial& m : standard_monomials(K, deg)) {
            bool ok;
            if (single_d) {
                ok = hilbert_compatible(K, m, *single_d);
            } else {
                ok = true;
                for (Exponent d = 1; d <= socle && ok; ++d)
                    ok = hilbert_compatible(K, m, d);
            }
            if (ok)
                return split(K, m);
        }
    }
    return std::nullopt;
}

MonomialIdeal generators_without(const MonomialIdeal& I, const Monomial& m) {
    auto it = std::find(I.gens().begin(), I.gens().end(), m);
    if (it == I.gens().end())
        throw std::invalid_argument("m is not a minimal generator of I");
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens())
        if (!(g == m))
            gens.push_back(g);
    // Already minimal: nothing in G(I) \ {m} divides anything else in G(I).
    return MonomialIdeal(I.vars(), std::move(gens));
}

namespace {

bool ideal_contained_in(const MonomialIdeal& A, const MonomialIdeal& B) {
    return std::all_of(A.gens().begin(), A.gens().end(),
                       [&](const Monomial& g) { return contains(B, g); });
}

} // namespace

bool can_glue(const MonomialIdeal& I, const MonomialIdeal& J,
              const Monomial& m) {
    if (!I.is_proper() || !J.is_proper())
        throw std::invalid_argument("gluing needs proper ideals");
    if (std::find(I.gens().begin(), I.gens().end(), m) == I.gens().end())
        return false;
    MonomialIdeal residual = colon_by_monomial(generators_without(I, m), m);
    return ideal_contained_in(residual, J);
}

GluingSpec glue(const MonomialIdeal& I, const MonomialIdeal& J,
                const Monomial& m) {
    if (!can_glue(I, J, m))
        throw std::invalid_argument("gluing condition violated: need m in G(I) "
                                    "with I_m:(m) contained in J");
    MonomialIdeal i_m = generators_without(I, m);
    std::vector<Monomial> gens = i_m.gens();
    for (const Monomial& g : J.gens())
        gens.push_back(g * m);
    return GluingSpec{I, J, m, std::move(i_m),
                      MonomialIdeal(I.vars(), std::move(gens))};
}

std::vector<Monomial> glue_candidates(const MonomialIdeal& I,
                                      const MonomialIdeal& J) {
    std::vector<Monomial> out;
    for (const Monomial& m : I.gens())
        if (can_glue(I, J, m))
            out.push_back(m);
    return out;
}

MonomialIdeal family_product_linear(const std::vector<Exponent>& d) {
    const int n = (int)d.size();
    if (n < 1)
        throw std::invalid_argument("need at least one exponent");
    for (Exponent di : d)
        if (di < 1)
            throw std::invalid_argument("exponents must be positive");
    std::vector<Monomial> gens;
    for (int i = 1; i <= n - 1; ++i)
        gens.push_back(Monomial::variable(n, i - 1, d[(std::size_t)i] + 1));
    Exponent partial = d[0];
    for (int i = 1; i <= n; ++i) {
        gens.push_back(Monomial::variable(n, i - 1) *
                       Monomial::variable(n, n - 1, partial));
        if (i < n)
            partial = checked_add(partial, d[(std::size_t)i]);
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal family_squares_squared(int n) {
    if (n < 1)
        throw std::invalid_argument("need at least one variable");
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            gens.push_back(Monomial::variable(n, i, 2) *
                           Monomial::variable(n, j, 2));
    return MonomialIdeal(n, std::move(gens));
}

} // namespace monlef
