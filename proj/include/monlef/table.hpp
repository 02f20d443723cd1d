#pragma once

#include <string>
#include <vector>

#include "monlef/ideal.hpp"

namespace monlef {

/// An (s,n)-table: top row d_1..d_n plus s rows of alpha values. The phantom
/// entry alpha_{s+1,s+1} = 0 is never stored. Valid tables satisfy
///   (1) alpha_{i,j} = 0 for i > j,
///   (2) sum_i alpha_{i,j} <= d_j for every column j,
///   (3) d_k = sum_{i<k} alpha_{i,k} + sum_{j>k} alpha_{k,j} + alpha_{k+1,k+1}
///       for 1 <= k <= s.
struct Table {
    int s = 0;
    int n = 0;
    std::vector<Exponent> d;
    std::vector<std::vector<Exponent>> alpha; // s rows of n entries
};

struct TableViolation {
    int condition = 0; // 1, 2 or 3, or 0 for a shape problem
    int i = 0;         // row (1-based); 0 when not applicable
    int j = 0;         // column (1-based)
    std::string message;
};

std::vector<TableViolation> validate(const Table& t);

/// K(T) = K_0 + K_1 + ... + K_s, minimalized. A zero exponent inside a
/// parenthesized factor makes the prefix itself a generator.
MonomialIdeal ideal_of(const Table& t);

/// d_1 + ... + d_n - alpha_{1,1} - n; needs s >= 1 and K(T) proper.
Exponent predicted_socle(const Table& t);

/// (x1^d1, ..., xn^dn) + x1^{d1-a1}(x2^{d2-a2}, ..., xn^{dn-an}) for
/// 0 <= a_i <= d_i and d1 = a2 + ... + an. Coincides with ideal_of on the
/// matching one-row table.
MonomialIdeal lemma31_ideal(const std::vector<Exponent>& d,
                            const std::vector<Exponent>& alpha);

} // namespace monlef
