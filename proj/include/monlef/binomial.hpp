#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "monlef/ideal.hpp"
#include "monlef/lefschetz.hpp"
#include "monlef/table.hpp"

namespace monlef {

using Rational = mpq_class;

struct Term {
    Rational coeff;
    Monomial mono;

    bool operator==(const Term& o) const {
        return mono == o.mono && coeff == o.coeff;
    }
};

/// A polynomial with exact rational coefficients. Terms are kept sorted in
/// graded-lex descending order (leading term first) with no zero
/// coefficients, under the fixed order x1 > x2 > ... > xn.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Term> terms); // normalizes
    static Polynomial from_monomial(const Monomial& m,
                                    const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;
    int vars() const;

    Polynomial scaled(const Rational& c) const;
    Polynomial times(const Monomial& m) const;
    /// this + c * shift * p
    void add_scaled(const Polynomial& p, const Rational& c,
                    const Monomial& shift);

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<Term> terms_;
};

std::string render_polynomial(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// The generating set of Theorem-3.2 style ideals: one binomial
/// x1^{d1} + c*x2^{a2}...xn^{an}, the pure powers x2^{d2}..xn^{dn}, and the
/// products x1^{d1-a1}*xi^{di-ai}, kept only when not already redundant.
struct BinomialFamily {
    int n = 0;
    std::vector<Exponent> d;
    std::vector<Exponent> alpha;
    Rational c;
    std::vector<Polynomial> gens;
};

inline constexpr std::size_t kDefaultDimensionCap = 20000;

BinomialFamily kprime_gens(const std::vector<Exponent>& d,
                           const std::vector<Exponent>& alpha,
                           const Rational& c);

/// Generators of ideal_of(t) with x1^{d1} replaced by the binomial
/// x1^{d1} + c*x2^{a2}...xn^{an}, where a2 folds in alpha_{2,2} when s >= 2.
/// c = 0 yields the monomial generators unchanged.
std::vector<Polynomial> kprime_from_table(const Table& t, const Rational& c);

/// Normal form of p modulo the given generators: the order-largest reducible
/// term is rewritten first, until no term is divisible by a leading monomial.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& gens);
Polynomial reduce(const Polynomial& p, const BinomialFamily& f);

/// Buchberger criterion: every pairwise S-polynomial reduces to zero.
bool s_pair_check(const std::vector<Polynomial>& gens);
bool s_pair_check(const BinomialFamily& f);

/// Ideal of leading monomials, minimalized; requires a Groebner basis.
MonomialIdeal initial_ideal(const std::vector<Polynomial>& gens, int n);
MonomialIdeal initial_ideal(const BinomialFamily& f);

/// Checks K' = a : (x1^{alpha1}) degree by degree, where a is the complete
/// intersection (binomial, x2^{d2}, ..., xn^{dn}), by exact linear algebra
/// on normal forms modulo a.
bool verify_colon_identity(const BinomialFamily& f,
                           std::size_t dimension_cap = kDefaultDimensionCap);

/// Dimension of the socle of the quotient by the given Groebner basis.
long long socle_dimension(const std::vector<Polynomial>& gens, int n,
                          std::size_t dimension_cap = kDefaultDimensionCap);
long long socle_dimension(const BinomialFamily& f,
                          std::size_t dimension_cap = kDefaultDimensionCap);

/// Maximal-rank sweep for multiplication by powers of a linear form on the
/// normal-form basis of the quotient by the given Groebner basis. The sum
/// of the variables is tried first; a rank-deficient piece is re-certified
/// against a fixed ladder of integer-weight forms, since a relation of the
/// ideal can make one particular form degenerate on a non-monomial quotient.
/// Reaching the expected rank with any form is an exact certificate.
LefschetzReport check_slp_quotient(const std::vector<Polynomial>& gens, int n,
                                   std::size_t dimension_cap = kDefaultDimensionCap,
                                   int threads = 0);
LefschetzReport check_slp_binomial(const BinomialFamily& f,
                                   std::size_t dimension_cap = kDefaultDimensionCap,
                                   int threads = 0);

/// The full Theorem-3.2 verification pipeline for one family.
struct GorensteinCertificate {
    BinomialFamily family;
    bool proper = false;
    bool groebner = false;
    bool initial_matches_lemma = false;
    bool colon_identity = false;
    long long socle_dim = -1;
    bool gorenstein = false;
    LefschetzReport slp;
    std::vector<long long> hilbert;
    bool passed = false;
};

GorensteinCertificate gorenstein_certificate(
    const std::vector<Exponent>& d, const std::vector<Exponent>& alpha,
    const Rational& c, std::size_t dimension_cap = kDefaultDimensionCap,
    int threads = 0);

} // namespace monlef
