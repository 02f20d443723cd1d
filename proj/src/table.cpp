#include "monlef/table.hpp"

#include <stdexcept>
#include <string>

#include "monlef/util.hpp"

namespace monlef {

namespace {

std::string entry_name(int i, int j) {
    return "alpha_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

} // namespace

std::vector<TableViolation> validate(const Table& t) {
    if (t.n < 1 || t.s < 0 || t.s >= t.n)
        throw std::invalid_argument("table needs 0 <= s < n");
    if ((int)t.d.size() != t.n || (int)t.alpha.size() != t.s)
        throw std::invalid_argument("table shape mismatch");
    for (const auto& row : t.alpha)
        if ((int)row.size() != t.n)
            throw std::invalid_argument("table shape mismatch");

    std::vector<TableViolation> out;
    for (std::size_t j = 0; j < t.d.size(); ++j)
        if (t.d[j] < 0)
            out.push_back({0, 0, (int)j + 1, "negative top-row entry"});
    // (1) lower-triangular part is zero
    for (int i = 1; i <= t.s; ++i)
        for (int j = 1; j <= t.n; ++j) {
            Exponent a = t.alpha[(std::size_t)(i - 1)][(std::size_t)(j - 1)];
            if (a < 0)
                out.push_back({0, i, j, entry_name(i, j) + " is negative"});
            if (i > j && a != 0)
                out.push_back({1, i, j, entry_name(i, j) + " must be 0"});
        }
    // (2) column sums bounded by the top row
    for (int j = 1; j <= t.n; ++j) {
        Exponent sum = 0;
        for (int i = 1; i <= t.s; ++i)
            sum = checked_add(sum,
                              t.alpha[(std::size_t)(i - 1)][(std::size_t)(j - 1)]);
        if (sum > t.d[(std::size_t)(j - 1)])
            out.push_back({2, 0, j,
                           "column " + std::to_string(j) + " sums to " +
                               std::to_string(sum) + " > d_" +
                               std::to_string(j)});
    }
    // (3) each d_k is the sum along its colored path
    for (int k = 1; k <= t.s; ++k) {
        Exponent sum = 0;
        for (int i = 1; i <= k - 1; ++i)
            sum = checked_add(sum,
                              t.alpha[(std::size_t)(i - 1)][(std::size_t)(k - 1)]);
        for (int j = k + 1; j <= t.n; ++j)
            sum = checked_add(sum,
                              t.alpha[(std::size_t)(k - 1)][(std::size_t)(j - 1)]);
        if (k + 1 <= t.s) // alpha_{s+1,s+1} is the phantom zero
            sum = checked_add(sum,
                              t.alpha[(std::size_t)k][(std::size_t)k]);
        if (sum != t.d[(std::size_t)(k - 1)])
            out.push_back({3, k, 0,
                           "d_" + std::to_string(k) + " = " +
                               std::to_string(t.d[(std::size_t)(k - 1)]) +
                               " but the condition sums to " +
                               std::to_string(sum)});
    }
    return out;
}

MonomialIdeal ideal_of(const Table& t) {
    if (!validate(t).empty())
        throw std::invalid_argument("invalid table");
    const int n = t.n;
    std::vector<Monomial> gens;
    // K_0: the pure powers of the top row.
    for (int j = 1; j <= n; ++j)
        gens.push_back(Monomial::variable(n, j - 1, t.d[(std::size_t)(j - 1)]));
    // Column sums of the first i alpha rows, maintained incrementally.
    std::vector<Exponent> colsum((std::size_t)n, 0);
    for (int i = 1; i <= t.s; ++i) {
        for (int j = 1; j <= n; ++j)
            colsum[(std::size_t)(j - 1)] = checked_add(
                colsum[(std::size_t)(j - 1)],
                t.alpha[(std::size_t)(i - 1)][(std::size_t)(j - 1)]);
        std::vector<Exponent> prefix((std::size_t)n, 0);
        for (int j = 1; j <= i; ++j)
            prefix[(std::size_t)(j - 1)] =
                t.d[(std::size_t)(j - 1)] - colsum[(std::size_t)(j - 1)];
        Monomial pre(prefix);
        for (int j = i + 1; j <= n; ++j) {
            Exponent e =
                t.d[(std::size_t)(j - 1)] - colsum[(std::size_t)(j - 1)];
            gens.push_back(pre * Monomial::variable(n, j - 1, e));
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

Exponent predicted_socle(const Table& t) {
    if (t.s < 1)
        throw std::invalid_argument("socle prediction needs s >= 1");
    MonomialIdeal k = ideal_of(t);
    if (k.is_unit())
        throw std::invalid_argument("socle prediction is void for the unit ideal");
    Exponent sum = 0;
    for (Exponent dj : t.d)
        sum = checked_add(sum, dj);
    return sum - t.alpha[0][0] - t.n;
}

MonomialIdeal lemma31_ideal(const std::vector<Exponent>& d,
                            const std::vector<Exponent>& alpha) {
    const int n = (int)d.size();
    if (n < 1 || alpha.size() != d.size())
        throw std::invalid_argument("d and alpha must have equal positive length");
    Exponent tail = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0 || alpha[i] < 0 || alpha[i] > d[i])
            throw std::invalid_argument("need 0 <= alpha_i <= d_i");
        if (i >= 1)
            tail = checked_add(tail, alpha[i]);
    }
    if (d[0] != tail)
        throw std::invalid_argument("need d_1 = alpha_2 + ... + alpha_n");
    std::vector<Monomial> gens;
    for (int j = 0; j < n; ++j)
        gens.push_back(Monomial::variable(n, j, d[(std::size_t)j]));
    Monomial pre = Monomial::variable(n, 0, d[0] - alpha[0]);
    for (int j = 1; j < n; ++j)
        gens.push_back(pre * Monomial::variable(
                                 n, j, d[(std::size_t)j] - alpha[(std::size_t)j]));
    return MonomialIdeal(n, std::move(gens));
}

} // namespace monlef
