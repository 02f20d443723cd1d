#include "monlef/maci.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace monlef {

MaciParams::MaciParams(Exponent a_, Exponent b_, Exponent c_)
    : a(a_), b(b_), c(c_) {
    if (!(a >= b && b >= c && c >= 1))
        throw std::invalid_argument("need a >= b >= c >= 1");
}

MonomialIdeal maci_ideal(const MaciParams& p) {
    const Exponent d = p.common_degree();
    std::vector<Monomial> gens;
    for (int v = 0; v < 3; ++v)
        gens.push_back(Monomial::variable(3, v, d));
    gens.push_back(Monomial({p.a, p.b, p.c}));
    return MonomialIdeal(3, std::move(gens));
}

MonomialIdeal thm51_ideal(int n, Exponent a) {
    if (n < 2 || a < 2)
        throw std::invalid_argument("need n >= 2 and a >= 2");
    std::vector<Monomial> gens;
    for (int v = 0; v < n; ++v)
        gens.push_back(Monomial::variable(n, v, a));
    gens.push_back(Monomial::variable(n, 0, a - 1) * Monomial::variable(n, 1));
    return MonomialIdeal(n, std::move(gens));
}

namespace {

// d = 6k+3 for a nonnegative k; returns k.
std::optional<Exponent> twin_peak_k(Exponent d) {
    if (d < 3 || d % 6 != 3)
        return std::nullopt;
    return (d - 3) / 6;
}

} // namespace

bool predict_wlp(const MaciParams& p) {
    auto k = twin_peak_k(p.common_degree());
    if (!k)
        return true;
    bool two_equal = p.a == p.b || p.b == p.c || p.a == p.c;
    return !(p.a < 4 * *k + 2 && two_equal);
}

bool predict_slp(Exponent common_degree, std::array<Exponent, 3> mixed) {
    std::sort(mixed.begin(), mixed.end(), std::greater<>());
    const Exponent d = common_degree;
    if (mixed[0] + mixed[1] + mixed[2] != d || mixed[2] < 0)
        return false;
    if (d >= 2 && mixed == std::array<Exponent, 3>{d - 1, 1, 0})
        return true;
    if (d >= 4 && mixed == std::array<Exponent, 3>{d - 2, 1, 1})
        return true;
    if (d == 5 && mixed == std::array<Exponent, 3>{2, 2, 1})
        return true;
    if (d == 7 && mixed == std::array<Exponent, 3>{3, 2, 2})
        return true;
    return false;
}

bool predict_slp(const MaciParams& p) {
    return predict_slp(p.common_degree(), {p.a, p.b, p.c});
}

std::pair<long long, long long> twin_peak_values(const MaciParams& p) {
    auto k = twin_peak_k(p.common_degree());
    if (!k || p.a >= 4 * *k + 2)
        throw std::invalid_argument(
            "twin peaks need d = 6k+3 and a < 4k+2");
    MonomialIdeal ideal = maci_ideal(p);
    return {(long long)standard_monomials(ideal, 8 * *k + 2).size(),
            (long long)standard_monomials(ideal, 8 * *k + 3).size()};
}

long long fixed_count(const MaciParams& p, Exponent degree,
                      std::pair<int, int> swap) {
    if (swap.first == swap.second || swap.first < 0 || swap.second < 0 ||
        swap.first > 2 || swap.second > 2)
        throw std::invalid_argument("swap needs two distinct variable indices");
    long long count = 0;
    for (const Monomial& m : standard_monomials(maci_ideal(p), degree))
        if (m.exponent(swap.first) == m.exponent(swap.second))
            ++count;
    return count;
}

bool open_case(const MaciParams& p) {
    auto k = twin_peak_k(p.common_degree());
    return k && p.a < 4 * *k + 2 && p.a > p.b && p.b > p.c && p.c > 0;
}

ScanReport scan(const std::vector<Exponent>& d_values,
                const ScanOptions& options) {
    ScanReport report;
    for (Exponent d : d_values) {
        if (d < 3)
            throw std::invalid_argument("scan needs d >= 3");
        for (Exponent a = (d + 2) / 3; a <= d - 2; ++a) {
            for (Exponent b = (d - a + 1) / 2; b <= std::min(a, d - a - 1);
                 ++b) {
                MaciParams p(a, b, d - a - b);
                ScanRow row;
                row.params = p;
                row.predicted_wlp = predict_wlp(p);
                row.open_case = open_case(p);
                std::optional<bool> cached;
                if (options.lookup)
                    cached = options.lookup(p, "wlp");
                if (cached) {
                    row.computed_wlp = *cached;
                    row.from_cache_wlp = true;
                } else {
                    row.computed_wlp =
                        check_lefschetz(maci_ideal(p), LefschetzProperty::weak,
                                        options.threads)
                            .verdict;
                }
                row.agree_wlp = row.computed_wlp == row.predicted_wlp;
                if (options.slp && d <= options.slp_degree_cap) {
                    row.predicted_slp = predict_slp(p);
                    std::optional<bool> cached_slp;
                    if (options.lookup)
                        cached_slp = options.lookup(p, "slp");
                    if (cached_slp) {
                        row.computed_slp = *cached_slp;
                        row.from_cache_slp = true;
                    } else {
                        row.computed_slp = check_lefschetz(
                                               maci_ideal(p),
                                               LefschetzProperty::strong,
                                               options.threads)
                                               .verdict;
                    }
                    row.agree_slp = *row.computed_slp == *row.predicted_slp;
                }
                if (!row.agree_wlp || (row.agree_slp && !*row.agree_slp))
                    ++report.disagreements;
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

} // namespace monlef
