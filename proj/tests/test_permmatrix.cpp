#include <doctest.h>

#include <filesystem>
#include <random>

#include <gmpxx.h>

#include "permrank/bounds.hpp"
#include "permrank/perm.hpp"
#include "permrank/permmatrix.hpp"

using namespace permrank;

namespace {

bool trial_division_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rank_rational(const BinaryMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c) ? 1 : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution bit(density);
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
    return m;
}

// Low-rank 0/1 matrix: rows copied from a small pool.
BinaryMatrix repeated_rows(std::size_t rows, std::size_t cols, std::size_t pool, std::mt19937_64& rng) {
    const BinaryMatrix base = random_matrix(pool, cols, rng, 0.5);
    std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t s = pick(rng);
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, base.get(s, c));
    }
    return m;
}

constexpr std::uint32_t kLargePrime = 2147483629U;

}  // namespace

TEST_CASE("P^(n) matches its definition") {
    for (int n = 1; n <= 5; ++n) {
        const auto p = build_p(n);
        const auto perms = enumerate_sn(n);
        REQUIRE(p.rows() == perms.size());
        for (std::size_t r = 0; r < perms.size(); ++r)
            for (std::size_t c = 0; c < perms.size(); ++c)
                CHECK(p.get(r, c) == is_cyclic(compose(perms[c], perms[r])));
    }
    CHECK(build_p(2) == BinaryMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(build_p(1) == BinaryMatrix::identity(1));
}

TEST_CASE("row and column sums, symmetry") {
    for (int n = 1; n <= 6; ++n) {
        const auto p = build_p(n);
        const auto cycles = factorial(n - 1);
        for (std::size_t i = 0; i < p.rows(); ++i) {
            CHECK(p.row_sum(i) == cycles);
            CHECK(p.col_sum(i) == cycles);
        }
        CHECK(p.count_ones() == factorial(n) * cycles);
        CHECK(p.is_symmetric());
        CHECK(p.degree() == n);
    }
}

TEST_CASE("Q^(n) is a row permutation of P^(n) and equals the operator matrix") {
    for (int n = 1; n <= 5; ++n) {
        const auto p = build_p(n);
        const auto q = build_q(n);
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const auto moved = rank_of(inverse(unrank(n, r)));
            for (std::size_t c = 0; c < p.cols(); ++c) CHECK(q.get(moved, c) == p.get(r, c));
        }
        CHECK(operator_matrix(n) == q);
    }
    CHECK_THROWS_AS(operator_matrix(kMaxOperatorDegree + 1), std::out_of_range);
    CHECK_THROWS_AS(build_p(0), std::out_of_range);
    CHECK_THROWS_AS(build_p(kMaxMatrixDegree + 1), std::out_of_range);
}

TEST_CASE("primality helpers") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint32_t> any(0, 0xFFFFFFFFU);
    for (std::uint32_t n = 0; n < 5000; ++n) CHECK(is_prime_u32(n) == trial_division_prime(n));
    for (int i = 0; i < 2000; ++i) {
        const std::uint32_t n = any(rng);
        CHECK(is_prime_u32(n) == trial_division_prime(n));
    }
    CHECK(is_prime_u32(kLargePrime));
    CHECK(trial_division_prime(kLargePrime));
    CHECK_FALSE(is_prime_u32(3215031751U));  // strong pseudoprime to bases 2, 3, 5, 7
    const auto primes = random_primes(5, 99);
    CHECK(primes == random_primes(5, 99));
    for (auto p : primes) {
        CHECK(p > (1U << 29));
        CHECK(p < (1U << 31));
        CHECK(trial_division_prime(p));
    }
}

TEST_CASE("rank_mod_p named cases") {
    CHECK(rank_mod_p(BinaryMatrix::identity(5), kLargePrime) == 5);
    CHECK(rank_mod_p(BinaryMatrix(4, 4), kLargePrime) == 0);
    CHECK(rank_mod_p(BinaryMatrix::from_rows({{1, 1}, {1, 1}}), kLargePrime) == 1);
    CHECK(rank_mod_p(build_p(3), kLargePrime) == 6);
    CHECK(rank_mod_p(build_p(4), kLargePrime) == 20);
    CHECK_THROWS_AS(rank_mod_p(BinaryMatrix::identity(2), 7), std::invalid_argument);
    CHECK_THROWS_AS(rank_mod_p(BinaryMatrix::identity(2), kLargePrime - 1), std::invalid_argument);
}

TEST_CASE("rank_exact named cases") {
    CHECK(rank_exact(BinaryMatrix::identity(7)) == 7);
    CHECK(rank_exact(BinaryMatrix(3, 5)) == 0);
    CHECK(rank_exact(BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 3);
    // Singular mod 2 but not over Q.
    CHECK(rank_exact(BinaryMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == 3);
    CHECK_THROWS_AS(rank_exact(BinaryMatrix::identity(20), 10), MatrixTooLarge);
}

TEST_CASE("exact and modular ranks against rational elimination") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 40;
        const std::size_t cols = 1 + rng() % 40;
        const BinaryMatrix m = trial % 2 == 0 ? random_matrix(rows, cols, rng, 0.3 + 0.1 * (trial % 5))
                                              : repeated_rows(rows, cols, 1 + rng() % 8, rng);
        const std::size_t expected = rank_rational(m);
        CHECK(rank_exact(m) == expected);
        const std::size_t modular = rank_mod_p(m, kLargePrime);
        CHECK(modular <= expected);
        CHECK(modular == expected);
    }
}

TEST_CASE("modular rank does not depend on thread count") {
    std::mt19937_64 rng(5);
    const auto m = repeated_rows(300, 200, 90, rng);
    const auto one = rank_mod_p(m, kLargePrime, 1);
    for (int t : {2, 3, 8}) CHECK(rank_mod_p(m, kLargePrime, t) == one);
    const auto p5 = build_p(5);
    for (int t : {1, 2, 4}) CHECK(rank_mod_p(p5, kLargePrime, t) == 70);
}

TEST_CASE("rank_certified") {
    for (int n = 1; n <= 6; ++n) {
        const auto cert = rank_certified(n);
        CHECK(cert.method == "exact-fraction-free");
        CHECK(mpz_class(static_cast<unsigned long>(cert.rank)) == binomial(2 * n - 2, n - 1));
    }
    RankConfig modp;
    modp.method = RankMethod::Modular;
    const auto cert5 = rank_certified(5, modp);
    CHECK(cert5.method == "modular-multiprime");
    CHECK(cert5.trials.size() == 3);
    CHECK(cert5.rank == 70);

    RankConfig exact;
    exact.method = RankMethod::Exact;
    CHECK_THROWS_AS(rank_certified(7, exact), MatrixTooLarge);
    CHECK_THROWS_AS(rank_certified(8), std::out_of_range);
    modp.num_primes = 0;
    CHECK_THROWS_AS(rank_certified(4, modp), std::invalid_argument);
    CHECK(parse_rank_method("modp") == RankMethod::Modular);
    CHECK(to_string(RankMethod::Exact) == "exact");
    CHECK_THROWS_AS(parse_rank_method("gauss"), std::invalid_argument);
}

TEST_CASE("PBM round trip") {
    const auto dir = std::filesystem::temp_directory_path();
    for (int n = 1; n <= 4; ++n) {
        const auto p = build_p(n);
        for (auto format : {PbmFormat::Raw, PbmFormat::Plain}) {
            const auto path = dir / ("permrank_p" + std::to_string(n) + (format == PbmFormat::Raw ? ".pbm" : "_plain.pbm"));
            dump_pbm(p, path, format);
            const auto back = read_pbm(path);
            CHECK(back.rows() == p.rows());
            CHECK(back.count_ones() == p.count_ones());
            for (std::size_t r = 0; r < p.rows(); ++r)
                for (std::size_t c = 0; c < p.cols(); ++c) CHECK(back.get(r, c) == p.get(r, c));
            std::filesystem::remove(path);
        }
    }
    CHECK(build_p(2).count_ones() == 2);
    CHECK(build_p(3).count_ones() == 12);
    CHECK(build_p(4).count_ones() == 144);
    CHECK_THROWS_AS(read_pbm(dir / "permrank_missing.pbm"), std::runtime_error);
}
