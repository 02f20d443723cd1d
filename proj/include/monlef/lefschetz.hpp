#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "monlef/ideal.hpp"
#include "monlef/linalg.hpp"

namespace monlef {

/// The matrix of multiplication by (x1+...+xn)^d from degree i to degree
/// i+d of an Artinian monomial quotient, on standard-monomial bases.
/// Entries are the positive multinomial coefficients d!/prod((v_j-u_j)!);
/// pairs where the target does not dominate the source are absent.
struct GradedMap {
    Exponent source_degree = 0;
    Exponent jump = 0;
    std::vector<Monomial> source_basis;
    std::vector<Monomial> target_basis;
    std::vector<std::tuple<long long, long long, mpz_class>> entries;

    long long rows() const { return (long long)target_basis.size(); }
    long long cols() const { return (long long)source_basis.size(); }
    IntMatrix dense() const;
};

enum class LefschetzProperty { weak, strong };

std::string to_string(LefschetzProperty p);

struct LefschetzFailure {
    Exponent d = 0;
    Exponent i = 0;
    long long rank = 0;
    long long expected = 0;
};

struct LefschetzReport {
    LefschetzProperty property = LefschetzProperty::weak;
    bool verdict = false;
    HilbertData hilbert;
    std::vector<LefschetzFailure> failures;
};

GradedMap power_map(const MonomialIdeal& I, Exponent i, Exponent d);

long long exact_rank(const GradedMap& m);

/// Shared maximal-rank sweep: weak tests d=1 only, strong tests all
/// d in [1, socle]. rank_of(i, d) must return the exact rank of the
/// degree-i to degree-(i+d) map. The (d, i) grid is processed in parallel
/// and failures are reported sorted by (d, i).
LefschetzReport run_max_rank_sweep(
    LefschetzProperty property, const HilbertData& hilbert,
    const std::function<long long(Exponent i, Exponent d)>& rank_of,
    int threads = 0);

LefschetzReport check_lefschetz(const MonomialIdeal& I,
                                LefschetzProperty property, int threads = 0);

/// SLP plus a symmetric Hilbert function.
bool has_narrow_slp(const MonomialIdeal& I, int threads = 0);

} // namespace monlef
