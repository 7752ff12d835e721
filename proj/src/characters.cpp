#include "permrank/characters.hpp"

#include <stdexcept>

namespace permrank {

mpz_class CharacterEvaluator::operator()(const Partition& lambda, const Partition& alpha) {
    if (lambda.weight() != alpha.weight())
        throw std::invalid_argument("character: weight mismatch between " + to_string(lambda) +
                                    " and " + to_string(alpha));
    return evaluate(lambda, alpha, 0);
}

mpz_class CharacterEvaluator::evaluate(const Partition& lambda, const Partition& alpha, int consumed) {
    if (lambda.empty()) return 1;

    const std::vector<int> rest(alpha.parts().begin() + consumed, alpha.parts().end());
    auto key = std::make_pair(lambda, Partition(rest));
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    mpz_class sum = 0;
    for (const RimHook& xi : rim_hooks(lambda, alpha[consumed])) {
        const mpz_class sub = evaluate(xi.residual, alpha, consumed + 1);
        if (xi.leg_length % 2 == 0)
            sum += sub;
        else
            sum -= sub;
    }
    cache_.emplace(std::move(key), sum);
    return sum;
}

mpz_class mn_character(const Partition& lambda, const Partition& alpha) {
    CharacterEvaluator eval;
    return eval(lambda, alpha);
}

mpz_class character_at_ncycle(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("character_at_ncycle: empty partition");
    if (!is_hook(lambda)) return 0;
    return (lambda.length() - 1) % 2 == 0 ? 1 : -1;
}

mpz_class specht_dim(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("specht_dim: empty partition");
    return syt_count(lambda);
}

mpz_class class_size(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("class_size: empty partition");
    mpz_class size;
    mpz_fac_ui(size.get_mpz_t(), static_cast<unsigned long>(mu.weight()));
    mpz_class centralizer = 1;
    for (int i = 0; i < mu.length();) {
        int j = i;
        while (j < mu.length() && mu[j] == mu[i]) ++j;
        const auto multiplicity = static_cast<unsigned long>(j - i);
        mpz_class power, fact;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(mu[i]), multiplicity);
        mpz_fac_ui(fact.get_mpz_t(), multiplicity);
        centralizer *= power * fact;
        i = j;
    }
    return size / centralizer;
}

CharacterTable character_table(int n) {
    if (n < 1 || n > kMaxCharacterTableDegree)
        throw std::out_of_range("character_table: n must be in [1, " +
                                std::to_string(kMaxCharacterTableDegree) + "]");
    CharacterTable table;
    table.n = n;
    table.irreducibles = partitions_of(n);
    table.classes = table.irreducibles;
    CharacterEvaluator eval;
    for (const Partition& lambda : table.irreducibles) {
        auto& row = table.values.emplace_back();
        for (const Partition& mu : table.classes) row.push_back(eval(lambda, mu));
    }
    return table;
}

}  // namespace permrank
