#include "monlef/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace monlef {

long long exact_rank(IntMatrix m) {
    long long rank = 0;
    mpz_class prev = 1;
    mpz_class q, r;
    long long row = 0;
    for (long long col = 0; col < m.cols && row < m.rows; ++col) {
        // First nonzero entry in column order becomes the pivot.
        long long pivot = -1;
        for (long long i = row; i < m.rows; ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (long long j = col; j < m.cols; ++j)
                std::swap(m.at(pivot, j), m.at(row, j));
        const mpz_class& p = m.at(row, col);
        for (long long i = row + 1; i < m.rows; ++i) {
            for (long long j = col + 1; j < m.cols; ++j) {
                mpz_class num = p * m.at(i, j) - m.at(i, col) * m.at(row, j);
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                            prev.get_mpz_t());
                if (r != 0)
                    throw std::logic_error("Bareiss division was not exact");
                m.at(i, j) = q;
            }
            m.at(i, col) = 0;
        }
        prev = p;
        ++row;
        ++rank;
    }
    return rank;
}

IntMatrix clear_denominators(long long rows, long long cols,
                             const std::vector<RationalEntry>& entries) {
    std::vector<mpz_class> row_scale((std::size_t)rows, mpz_class(1));
    for (const auto& [r, c, v] : entries) {
        mpz_class den = v.get_den();
        mpz_class& s = row_scale[(std::size_t)r];
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), den.get_mpz_t());
        s = s / g * den;
    }
    IntMatrix m(rows, cols);
    for (const auto& [r, c, v] : entries) {
        mpq_class scaled = v * mpq_class(row_scale[(std::size_t)r]);
        scaled.canonicalize();
        if (scaled.get_den() != 1)
            throw std::logic_error("denominator clearing failed");
        m.at(r, c) += scaled.get_num();
    }
    return m;
}

} // namespace monlef
