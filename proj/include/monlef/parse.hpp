#pragma once

#include <optional>
#include <string>

#include "monlef/binomial.hpp"
#include "monlef/ideal.hpp"
#include "monlef/table.hpp"

namespace monlef {

/// Parses the ideal grammar: comma-separated monomials over variables
/// x1..xn (aliases x, y, z, w for n <= 4), `^` for powers, `*` optional,
/// e.g. "x^3, y^3, z^5, x^2*y^2, x*z, y*z". The variable count is inferred
/// from the largest index used unless an override is given. Parses to the
/// minimalized ideal; errors carry the byte offset.
MonomialIdeal parse_ideal(const std::string& text,
                          std::optional<int> n_override = std::nullopt);

Monomial parse_monomial(const std::string& text,
                        std::optional<int> n_override = std::nullopt);

/// Extends the monomial grammar with `+`, `-` and rational coefficients,
/// e.g. "x^3 + 1*y*z^2" or "x^2 - 1/2*y^2".
Polynomial parse_polynomial(const std::string& text,
                            std::optional<int> n_override = std::nullopt);

} // namespace monlef
