#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monlef/monomial.hpp"

namespace monlef {

/// A monomial ideal, held by its minimal generating set in canonical
/// (graded-lex descending) order, so equality is structural.
///
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n);
    /// Minimalizes and sorts the given generators.
    MonomialIdeal(int n, std::vector<Monomial> gens);

    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(int n);
    static MonomialIdeal principal(const Monomial& m);

    int vars() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }

    bool operator==(const MonomialIdeal&) const = default;

private:
    int n_ = 0;
    std::vector<Monomial> gens_;
};

struct HilbertData {
    std::vector<long long> values;
    long long socle_degree = 0;
    bool symmetric = false;
    bool unimodal = false;
};

MonomialIdeal minimalize(std::vector<Monomial> gens, int n);
MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m);
bool contains(const MonomialIdeal& I, const Monomial& m);

/// True iff some pure power of every variable lies in I (the quotient is
/// finite-dimensional). The unit ideal counts as Artinian.
bool is_artinian(const MonomialIdeal& I);

/// Least pure-power exponent per variable; requires a proper Artinian ideal.
std::vector<Exponent> artinian_caps(const MonomialIdeal& I);

/// Sum of (cap - 1) over all variables: every standard monomial has degree
/// at most this.
Exponent socle_bound(const MonomialIdeal& I);

/// All degree-i monomials outside I, in canonical order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& I, Exponent i);

HilbertData hilbert_data(const MonomialIdeal& I);

/// Checks the basis identity K^c = I^c ⊔ m·J^c degree by degree for
/// I = K + (m), J = K : (m). Always true mathematically; a false return
/// flags an implementation bug.
bool verify_split(const MonomialIdeal& K, const Monomial& m);

std::string render_ideal(const MonomialIdeal& I);
std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);

} // namespace monlef
