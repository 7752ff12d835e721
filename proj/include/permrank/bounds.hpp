#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace permrank {

/// C(n, k); zero when k < 0 or k > n, and for negative n.
mpz_class binomial(long n, long k);

/// Rank of the communication matrix of n-state two-way DFAs:
/// sum_{k=1}^n C(n,k-1) C(n,k) C(2k-2,k-1).
mpz_class bound_new(int n);

/// Earlier lower bound: sum_{k=1}^n C(n,k-1) C(n,k) 2^{k-1}.
mpz_class bound_earlier(int n);

/// Upper bound: sum_{k=1}^n C(n,k-1) C(n,k) k!.
mpz_class bound_upper(int n);

/// Sum_{k=1}^n C(n,k-1) C(n,k) r_k for caller-supplied per-block ranks,
/// ranks[k-1] = rank of P^(k).
mpz_class bound_from_ranks(int n, const std::vector<mpz_class>& ranks);

/// States of the one-way DFA simulating an n-state 2DFA: n(n^n - (n-1)^n) + 1.
mpz_class dfa_bound(int n);

/// States of the one-way NFA simulating an n-state 2DFA: C(2n, n+1).
mpz_class nfa_bound(int n);

struct AsymptoticRatio {
    int n = 0;
    int digits = 0;
    /// bound_new(n) * 8 pi n / (3 sqrt(3) 9^n), truncated to `digits` significant digits.
    std::string decimal;
    double value = 0.0;
    /// |r(n) - 1|, from the extended-precision quotient.
    double deviation = 0.0;
};

inline constexpr int kMaxRatioDigits = 50;

/// Evaluates the ratio as an exact integer quotient scaled by a power of ten,
/// with pi and sqrt(3) embedded to 55 digits. digits must be in [1, 50].
AsymptoticRatio asymptotic_ratio(int n, int digits = 30);

struct BoundRow {
    int n = 0;
    mpz_class earlier_lower;
    mpz_class new_lower;
    mpz_class upper;
};

std::vector<BoundRow> table(int n_max);

enum class TableFormat { Csv, Json, Markdown, Plain };

TableFormat parse_table_format(const std::string& text);
std::string format_table(const std::vector<BoundRow>& rows, TableFormat format);

}  // namespace permrank
