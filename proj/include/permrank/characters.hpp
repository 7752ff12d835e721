#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permrank/young.hpp"

namespace permrank {

/// Largest n accepted by character_table.
inline constexpr int kMaxCharacterTableDegree = 10;

/// Irreducible character values of symmetric groups by the
/// Murnaghan-Nakayama rule:
///
///   chi_lambda(alpha) = sum over rim hooks xi of lambda with alpha_1 cells of
///                       (-1)^leg(xi) * chi_{lambda \ xi}(alpha without alpha_1)
///
/// with chi_()(()) = 1. The largest part of alpha is stripped first.
/// Intermediate results are memoized per evaluator; an evaluator is not
/// meant to be shared between threads.
class CharacterEvaluator {
public:
    /// Throws std::invalid_argument if the weights differ.
    mpz_class operator()(const Partition& lambda, const Partition& alpha);

    std::size_t cache_size() const { return cache_.size(); }

private:
    // alpha is represented by the number of its largest parts already removed.
    mpz_class evaluate(const Partition& lambda, const Partition& alpha, int consumed);

    std::map<std::pair<Partition, Partition>, mpz_class> cache_;
};

/// chi_lambda evaluated on the conjugacy class of cycle type alpha.
mpz_class mn_character(const Partition& lambda, const Partition& alpha);

/// chi_lambda on an n-cycle: zero unless lambda is a hook, and
/// (-1)^(rows - 1) on a hook, since the whole diagram is then the only rim
/// hook of n cells.
mpz_class character_at_ncycle(const Partition& lambda);

/// Dimension of the irreducible representation indexed by lambda
/// (the number of standard Young tableaux).
mpz_class specht_dim(const Partition& lambda);

/// Number of permutations of cycle type mu: n! / prod_i i^{m_i} m_i!.
mpz_class class_size(const Partition& mu);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> irreducibles;  // rows
    std::vector<Partition> classes;       // columns
    std::vector<std::vector<mpz_class>> values;
};

/// Full table for S_n, rows and columns in partitions_of(n) order.
CharacterTable character_table(int n);

}  // namespace permrank
