#include "monlef/lefschetz.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "monlef/util.hpp"

namespace monlef {

IntMatrix GradedMap::dense() const {
    IntMatrix m(rows(), cols());
    for (const auto& [r, c, v] : entries)
        m.at(r, c) = v;
    return m;
}

std::string to_string(LefschetzProperty p) {
    return p == LefschetzProperty::weak ? "weak" : "strong";
}

namespace {

// Multinomial coefficient d! / prod(e_j!).
mpz_class multinomial(Exponent d, const std::vector<Exponent>& e) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), (unsigned long)d);
    mpz_class f;
    for (Exponent ej : e) {
        mpz_fac_ui(f.get_mpz_t(), (unsigned long)ej);
        out /= f;
    }
    return out;
}

void compositions_rec(int vars, int var, Exponent remaining,
                      std::vector<Exponent>& current,
                      std::vector<std::vector<Exponent>>& out) {
    if (var + 1 == vars) {
        current[(std::size_t)var] = remaining;
        out.push_back(current);
        return;
    }
    for (Exponent e = remaining; e >= 0; --e) {
        current[(std::size_t)var] = e;
        compositions_rec(vars, var + 1, remaining - e, current, out);
    }
}

// All exponent vectors of total degree d in the given number of variables.
std::vector<std::vector<Exponent>> compositions(int vars, Exponent d) {
    std::vector<std::vector<Exponent>> out;
    std::vector<Exponent> current((std::size_t)vars, 0);
    compositions_rec(vars, 0, d, current, out);
    return out;
}

} // namespace

GradedMap power_map(const MonomialIdeal& I, Exponent i, Exponent d) {
    if (!is_artinian(I) || I.is_unit())
        throw std::invalid_argument("power_map needs a proper Artinian ideal");
    if (i < 0 || d < 1)
        throw std::invalid_argument("power_map needs i >= 0 and d >= 1");
    GradedMap map;
    map.source_degree = i;
    map.jump = d;
    map.source_basis = standard_monomials(I, i);
    map.target_basis = standard_monomials(I, i + d);
    std::unordered_map<Monomial, long long, MonomialHash> target_index;
    for (std::size_t r = 0; r < map.target_basis.size(); ++r)
        target_index.emplace(map.target_basis[r], (long long)r);
    const auto jumps = compositions(I.vars(), d);
    for (std::size_t c = 0; c < map.source_basis.size(); ++c) {
        const Monomial& u = map.source_basis[c];
        for (const auto& e : jumps) {
            std::vector<Exponent> v = u.exponents();
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = checked_add(v[j], e[j]);
            auto it = target_index.find(Monomial(v));
            if (it == target_index.end())
                continue;
            map.entries.emplace_back(it->second, (long long)c,
                                     multinomial(d, e));
        }
    }
    return map;
}

long long exact_rank(const GradedMap& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return exact_rank(m.dense());
}

LefschetzReport run_max_rank_sweep(
    LefschetzProperty property, const HilbertData& hilbert,
    const std::function<long long(Exponent i, Exponent d)>& rank_of,
    int threads) {
    LefschetzReport report;
    report.property = property;
    report.hilbert = hilbert;
    const Exponent socle = hilbert.socle_degree;
    std::vector<std::pair<Exponent, Exponent>> tasks; // (d, i), sorted
    const Exponent d_max = property == LefschetzProperty::weak ? 1 : socle;
    for (Exponent d = 1; d <= d_max; ++d)
        for (Exponent i = 0; i + d <= socle; ++i)
            tasks.emplace_back(d, i);
    std::vector<LefschetzFailure> results(tasks.size());
    std::vector<char> failed(tasks.size(), 0);
    parallel_for(tasks.size(), threads, [&](std::size_t t) {
        const auto [d, i] = tasks[t];
        long long dim_src = hilbert.values[(std::size_t)i];
        long long dim_dst = hilbert.values[(std::size_t)(i + d)];
        long long expected = std::min(dim_src, dim_dst);
        if (expected == 0)
            return; // 0 rows or columns: maximal rank vacuously
        long long rank = rank_of(i, d);
        if (rank < expected) {
            results[t] = LefschetzFailure{d, i, rank, expected};
            failed[t] = 1;
        }
    });
    for (std::size_t t = 0; t < tasks.size(); ++t)
        if (failed[t])
            report.failures.push_back(results[t]);
    report.verdict = report.failures.empty();
    return report;
}

LefschetzReport check_lefschetz(const MonomialIdeal& I,
                                LefschetzProperty property, int threads) {
    HilbertData h = hilbert_data(I);
    return run_max_rank_sweep(
        property, h,
        [&I](Exponent i, Exponent d) { return exact_rank(power_map(I, i, d)); },
        threads);
}

bool has_narrow_slp(const MonomialIdeal& I, int threads) {
    LefschetzReport r = check_lefschetz(I, LefschetzProperty::strong, threads);
    return r.verdict && r.hilbert.symmetric;
}

} // namespace monlef
