#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permrank {

/// Dense 0/1 matrix, one bit per entry, rows padded to 64-bit words.
/// When built from permutations, row and column i correspond to
/// unrank(degree(), i).
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols, int degree = 0);

    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static BinaryMatrix identity(std::size_t order);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    /// Degree n of the indexing permutations, or 0 for a plain matrix.
    int degree() const { return degree_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true) {
        auto& word = bits_[r * stride_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        word = value ? (word | mask) : (word & ~mask);
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {bits_.data() + r * stride_, stride_};
    }

    std::size_t row_sum(std::size_t r) const;
    std::size_t col_sum(std::size_t c) const;
    std::size_t count_ones() const;
    bool is_symmetric() const;

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    int degree_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline constexpr int kMaxMatrixDegree = 8;
inline constexpr int kMaxOperatorDegree = 6;
inline constexpr std::size_t kMaxExactOrder = 1000;

/// P^(n): entry (pi, sigma) is 1 iff sigma o pi is an n-cycle.
BinaryMatrix build_p(int n);

/// Q^(n): entry (pi, sigma) is 1 iff sigma o pi^-1 is an n-cycle, i.e. P^(n)
/// with row pi moved to row pi^-1.
BinaryMatrix build_q(int n);

/// Matrix of x -> q_n x on Z[S_n] in the permutation basis. Column g holds
/// the coefficients of q_n * g, computed in the group algebra.
BinaryMatrix operator_matrix(int n);

/// Rank over GF(p) for a prime 2^29 < p < 2^31. Input rows are processed in
/// blocks; each block is reduced against the current echelon basis on
/// `threads` workers, then merged in order. The result does not depend on
/// the worker count.
std::size_t rank_mod_p(const BinaryMatrix& m, std::uint32_t p, int threads = 1);

/// Thrown by rank_exact when the matrix exceeds the exact-elimination limit.
class MatrixTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Rank over Q by fraction-free (Bareiss) elimination on GMP integers.
std::size_t rank_exact(const BinaryMatrix& m, std::size_t max_order = kMaxExactOrder);

enum class RankMethod { Auto, Exact, Modular };

std::string to_string(RankMethod m);
RankMethod parse_rank_method(const std::string& text);

struct RankConfig {
    RankMethod method = RankMethod::Auto;
    int num_primes = 3;
    std::uint64_t seed = 0x5eed;
    int threads = 1;
    /// Permits modular rank at n = 8 (order 40320).
    bool allow_degree8 = false;
};

struct PrimeTrial {
    std::uint32_t prime = 0;
    std::size_t rank = 0;
};

struct RankCertificate {
    int n = 0;
    std::size_t rank = 0;
    /// "exact-fraction-free" or "modular-multiprime".
    std::string method;
    std::vector<PrimeTrial> trials;
    std::string note;
};

/// Modular ranks from different primes disagreed; no certificate exists.
class PrimeDisagreement : public std::runtime_error {
public:
    PrimeDisagreement(std::string what, std::vector<PrimeTrial> trials)
        : std::runtime_error(std::move(what)), trials_(std::move(trials)) {}
    const std::vector<PrimeTrial>& trials() const { return trials_; }

private:
    std::vector<PrimeTrial> trials_;
};

/// Rank of P^(n): exact elimination for n <= 6 under Auto, otherwise the
/// common rank over `num_primes` random primes. A modular rank never exceeds
/// the rational rank, so agreement certifies the lower bound outright.
RankCertificate rank_certified(int n, const RankConfig& config = {});

/// Deterministic Miller-Rabin, valid for all 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

/// `count` distinct primes in (2^29, 2^31) drawn from a generator seeded with `seed`.
std::vector<std::uint32_t> random_primes(int count, std::uint64_t seed);

enum class PbmFormat { Raw, Plain };

/// Writes a portable bitmap; 1 entries are black (filled).
void dump_pbm(const BinaryMatrix& m, const std::filesystem::path& path, PbmFormat format = PbmFormat::Raw);

/// Reads a P1 or P4 bitmap back into a matrix.
BinaryMatrix read_pbm(const std::filesystem::path& path);

}  // namespace permrank
