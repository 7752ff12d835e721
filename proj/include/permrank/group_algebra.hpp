#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "permrank/perm.hpp"
#include "permrank/young.hpp"

namespace permrank {

/// An element of the integer group algebra Z[S_n]: a finite formal sum of
/// permutations. Coefficients are keyed by rank_of; absent keys are zero.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int degree);

    static GroupAlgebraElement basis(const Permutation& g);

    int degree() const { return degree_; }
    const std::map<std::uint64_t, mpz_class>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }

    mpz_class coefficient(const Permutation& p) const;

    /// Adds c * p to this element.
    void accumulate(const Permutation& p, const mpz_class& c);

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void accumulate_rank(std::uint64_t r, const mpz_class& c);
    friend GroupAlgebraElement multiply(const GroupAlgebraElement&, const GroupAlgebraElement&);

    int degree_;
    std::map<std::uint64_t, mpz_class> terms_;
};

GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Bilinear extension of compose: (sum a_p p)(sum b_q q) = sum a_p b_q (p o q).
GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Sum of all n-cycles.
GroupAlgebraElement q_n(int n);

/// Sum of all permutations of cycle type mu.
GroupAlgebraElement class_sum(const Partition& mu);

/// True iff a commutes with every basis element of S_n. Checks the basis
/// elements on `threads` workers; the answer does not depend on the count.
bool is_central(const GroupAlgebraElement& a, int threads = 1, int max_degree = kDefaultMaxDegree);

}  // namespace permrank
