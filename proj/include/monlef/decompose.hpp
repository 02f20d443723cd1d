#pragma once

#include <optional>
#include <vector>

#include "monlef/ideal.hpp"

namespace monlef {

/// K split into I = K + (m) and J = K : (m) with respect to m.
struct Decomposition {
    MonomialIdeal K;
    Monomial m;
    MonomialIdeal I;
    MonomialIdeal J;
};

/// A gluing K = I_m + m·J of I and J with respect to m in G(I).
struct GluingSpec {
    MonomialIdeal I;
    MonomialIdeal J;
    Monomial m;
    MonomialIdeal I_m;
    MonomialIdeal K;
};

Decomposition split(const MonomialIdeal& K, const Monomial& m);

/// The two Hilbert-function implications that let maximal rank transfer from
/// R/I and R/J (in degree jump d) to R/K. Unit-ideal quotients count as the
/// zero algebra; Hilbert values at negative degrees are zero.
bool hilbert_compatible(const MonomialIdeal& K, const Monomial& m, Exponent d);

/// True iff R/I and R/J both have symmetric Hilbert series with socle degrees
/// r, s satisfying r - s = 2 deg(m). Throws inapplicable_error when I or J is
/// the unit ideal.
bool centre_to_centre(const MonomialIdeal& K, const Monomial& m);

/// Searches the standard monomials of K of positive degree, in canonical
/// order, for the first m that is Hilbert-compatible for the given d (or for
/// every d in [1, socle] when single_d is empty).
std::optional<Decomposition> find_witness(const MonomialIdeal& K,
                                          std::optional<Exponent> single_d);

/// The ideal generated by G(I) \ {m}; m must be a minimal generator.
MonomialIdeal generators_without(const MonomialIdeal& I, const Monomial& m);

/// True iff m is a minimal generator of I and I_m : (m) is contained in J.
bool can_glue(const MonomialIdeal& I, const MonomialIdeal& J,
              const Monomial& m);

GluingSpec glue(const MonomialIdeal& I, const MonomialIdeal& J,
                const Monomial& m);

/// All minimal generators of I admissible for gluing with J, canonical order.
std::vector<Monomial> glue_candidates(const MonomialIdeal& I,
                                      const MonomialIdeal& J);

/// (x1^{d1+1}, ..., x_{n-1}^{d_{n-1}+1}, x1*xn^{d0}, x2*xn^{d0+d1}, ...,
///  xn*xn^{d0+...+d_{n-1}}), minimalized; d has n entries d0..d_{n-1}.
MonomialIdeal family_product_linear(const std::vector<Exponent>& d);

/// (x1^2, ..., xn^2)^2, minimalized.
MonomialIdeal family_squares_squared(int n);

} // namespace monlef
