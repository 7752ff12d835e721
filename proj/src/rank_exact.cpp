#include <algorithm>
#include <vector>

#include <gmp.h>
#include <gmpxx.h>

#include "permrank/permmatrix.hpp"

namespace permrank {

std::size_t rank_exact(const BinaryMatrix& m, std::size_t max_order) {
    if (m.rows() > max_order || m.cols() > max_order)
        throw MatrixTooLarge("rank_exact: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " exceeds the exact limit " + std::to_string(max_order) +
                             "; use the modular rank instead");
    const std::size_t cols = m.cols();
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(cols));
    std::vector<std::size_t> active;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.get(r, c) ? 1 : 0;
        if (m.row_sum(r) > 0) active.push_back(r);
    }

    // Fraction-free echelon form. After k pivots every entry of a live row is
    // a (k+1)x(k+1) minor, so the division by the previous pivot is exact.
    // Rows that vanish stay zero and are dropped.
    mpz_class previous = 1;
    mpz_class t;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && !active.empty(); ++col) {
        auto pivot_it = std::find_if(active.begin(), active.end(), [&](std::size_t r) { return a[r][col] != 0; });
        if (pivot_it == active.end()) continue;
        const std::size_t pivot_row = *pivot_it;
        active.erase(pivot_it);
        const auto& pivot = a[pivot_row];

        std::vector<std::size_t> survivors;
        survivors.reserve(active.size());
        for (std::size_t r : active) {
            auto& row = a[r];
            mpz_srcptr factor = row[col].get_mpz_t();
            bool nonzero = false;
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_ptr entry = row[j].get_mpz_t();
                mpz_mul(t.get_mpz_t(), pivot[col].get_mpz_t(), entry);
                mpz_submul(t.get_mpz_t(), factor, pivot[j].get_mpz_t());
                mpz_divexact(entry, t.get_mpz_t(), previous.get_mpz_t());
                nonzero = nonzero || mpz_sgn(entry) != 0;
            }
            row[col] = 0;
            if (nonzero) survivors.push_back(r);
        }
        active = std::move(survivors);
        previous = pivot[col];
        ++rank;
    }
    return rank;
}

}  // namespace permrank
