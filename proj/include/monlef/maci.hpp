#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monlef/ideal.hpp"
#include "monlef/lefschetz.hpp"

namespace monlef {

/// Parameters of the equigenerated codimension-three family
/// (x^d, y^d, z^d, x^a y^b z^c) with d = a+b+c and a >= b >= c >= 1.
struct MaciParams {
    Exponent a = 1;
    Exponent b = 1;
    Exponent c = 1;

    MaciParams() = default;
    MaciParams(Exponent a_, Exponent b_, Exponent c_);
    Exponent common_degree() const { return a + b + c; }
};

MonomialIdeal maci_ideal(const MaciParams& p);

/// (x1^a, ..., xn^a, x1^{a-1} x2), minimalized; n >= 2, a >= 2.
MonomialIdeal thm51_ideal(int n, Exponent a);

/// Conjectured WLP verdict: failure exactly when d = 6k+3 with a < 4k+2 and
/// at least two of a, b, c coincide. Returns the predicted verdict (true
/// means WLP predicted to hold).
bool predict_wlp(const MaciParams& p);

/// Conjectured SLP verdict for the equigenerated m.a.c.i. with the given
/// common degree and mixed-generator exponent triple (any order): true
/// exactly for (d-1,1,0) with d >= 2, (d-2,1,1) with d >= 4, (2,2,1) at
/// d = 5, and (3,2,2) at d = 7, up to permutation.
bool predict_slp(Exponent common_degree, std::array<Exponent, 3> mixed);
bool predict_slp(const MaciParams& p);

/// Hilbert function values of R_{a,b,c} in degrees 8k+2 and 8k+3; the
/// hypotheses d = 6k+3 and a < 4k+2 are required.
std::pair<long long, long long> twin_peak_values(const MaciParams& p);

/// Number of degree-`degree` standard monomials fixed by swapping the
/// exponents of the two given variables (0-based indices).
long long fixed_count(const MaciParams& p, Exponent degree,
                      std::pair<int, int> swap);

/// True iff d = 6k+3 and 4k+2 > a > b > c > 0: the configuration whose WLP
/// status the conjecture leaves open.
bool open_case(const MaciParams& p);

struct ScanRow {
    MaciParams params;
    bool computed_wlp = false;
    bool predicted_wlp = false;
    bool agree_wlp = false;
    std::optional<bool> computed_slp;
    std::optional<bool> predicted_slp;
    std::optional<bool> agree_slp;
    bool open_case = false;
    bool from_cache_wlp = false;
    bool from_cache_slp = false;
};

struct ScanReport {
    std::vector<ScanRow> rows;
    long long disagreements = 0;
};

struct ScanOptions {
    bool slp = false;
    Exponent slp_degree_cap = 15; // SLP rows above this degree are skipped
    int threads = 0;
    /// Optional precomputed verdicts, keyed by (a, b, c, property). Property
    /// is "wlp" or "slp". A hit skips the rank computation.
    std::function<std::optional<bool>(const MaciParams&, const std::string&)>
        lookup;
};

/// Enumerates every a >= b >= c >= 1 with a+b+c = d for each requested d, in
/// ascending (a, b) order, computes verdicts and compares with predictions.
ScanReport scan(const std::vector<Exponent>& d_values,
                const ScanOptions& options = {});

} // namespace monlef
