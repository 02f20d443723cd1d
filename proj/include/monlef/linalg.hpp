#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <tuple>
#include <vector>

namespace monlef {

/// Dense arbitrary-precision integer matrix, row-major.
struct IntMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    IntMatrix(long long r, long long c)
        : rows(r), cols(c), a((std::size_t)(r * c)) {}

    mpz_class& at(long long r, long long c) {
        return a[(std::size_t)(r * cols + c)];
    }
    const mpz_class& at(long long r, long long c) const {
        return a[(std::size_t)(r * cols + c)];
    }
};

/// Rank over the rationals by fraction-free Bareiss elimination on
/// arbitrary-precision integers. Takes its working copy by value.
long long exact_rank(IntMatrix m);

using RationalEntry = std::tuple<long long, long long, mpq_class>;

/// Builds the row-scaled integer matrix of a sparse rational one (each row is
/// multiplied by the lcm of its denominators, which preserves rank).
IntMatrix clear_denominators(long long rows, long long cols,
                             const std::vector<RationalEntry>& entries);

} // namespace monlef
