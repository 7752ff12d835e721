#include "permrank/group_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace permrank {

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("group algebra degree must be positive");
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& g) {
    GroupAlgebraElement e(g.degree());
    e.accumulate(g, 1);
    return e;
}

mpz_class GroupAlgebraElement::coefficient(const Permutation& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("coefficient: degree mismatch");
    auto it = terms_.find(rank_of(p));
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void GroupAlgebraElement::accumulate(const Permutation& p, const mpz_class& c) {
    if (p.degree() != degree_) throw std::invalid_argument("accumulate: degree mismatch");
    accumulate_rank(rank_of(p), c);
}

void GroupAlgebraElement::accumulate_rank(std::uint64_t r, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(r, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("add: degree mismatch");
    GroupAlgebraElement sum = a;
    for (const auto& [r, c] : b.terms()) sum.accumulate(unrank(b.degree(), r), c);
    return sum;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("multiply: degree mismatch");
    const int n = a.degree();
    std::vector<std::pair<Permutation, const mpz_class*>> right;
    right.reserve(b.terms().size());
    for (const auto& [r, c] : b.terms()) right.emplace_back(unrank(n, r), &c);

    GroupAlgebraElement product(n);
    for (const auto& [ra, ca] : a.terms()) {
        const Permutation p = unrank(n, ra);
        for (const auto& [q, cb] : right) product.accumulate_rank(rank_of(compose(p, q)), ca * *cb);
    }
    return product;
}

GroupAlgebraElement q_n(int n) {
    GroupAlgebraElement e(n);
    for (const Permutation& p : enumerate_cyclic(n)) e.accumulate(p, 1);
    return e;
}

GroupAlgebraElement class_sum(const Partition& mu) {
    const int n = mu.weight();
    GroupAlgebraElement e(n);
    for (const Permutation& p : enumerate_sn(n, n))
        if (cycle_type(p) == mu) e.accumulate(p, 1);
    return e;
}

bool is_central(const GroupAlgebraElement& a, int threads, int max_degree) {
    const int n = a.degree();
    const std::vector<Permutation> group = enumerate_sn(n, max_degree);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> central{true};

    auto worker = [&] {
        for (std::size_t i = next++; i < group.size() && central.load(); i = next++) {
            const auto x = GroupAlgebraElement::basis(group[i]);
            if (!(multiply(x, a) == multiply(a, x))) central = false;
        }
    };

    threads = std::max(1, threads);
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    return central.load();
}

}  // namespace permrank
