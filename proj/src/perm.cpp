#include "permrank/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permrank/young.hpp"

namespace permrank {

namespace {

constexpr int kMaxRankableDegree = 20;  // 20! < 2^64

void require_same_degree(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("permutation degree mismatch: " + std::to_string(a.degree()) +
                                    " vs " + std::to_string(b.degree()));
}

}  // namespace

Permutation Permutation::identity(int n) {
    if (n < 1 || n > 255) throw std::invalid_argument("permutation degree must be in [1, 255]");
    std::vector<std::uint8_t> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), std::uint8_t{0});
    return Permutation(std::move(map));
}

Permutation Permutation::from_images(std::span<const int> images) {
    const auto n = images.size();
    if (n < 1 || n > 255) throw std::invalid_argument("permutation degree must be in [1, 255]");
    std::vector<std::uint8_t> map(n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = images[i];
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("images do not form a bijection of {1.." +
                                        std::to_string(n) + "}");
        seen[static_cast<std::size_t>(v - 1)] = true;
        map[i] = static_cast<std::uint8_t>(v - 1);
    }
    return Permutation(std::move(map));
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int a = cycle[i];
            if (a < 1 || a > n || used[static_cast<std::size_t>(a - 1)])
                throw std::invalid_argument("cycles must be disjoint and within {1..n}");
            used[static_cast<std::size_t>(a - 1)] = true;
            images[static_cast<std::size_t>(a - 1)] = cycle[(i + 1) % cycle.size()];
        }
    }
    return from_images(images);
}

std::vector<int> Permutation::images() const {
    std::vector<int> out(map_.size());
    std::transform(map_.begin(), map_.end(), out.begin(), [](std::uint8_t v) { return v + 1; });
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
        if (map_[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& sigma, const Permutation& pi) {
    require_same_degree(sigma, pi);
    std::vector<std::uint8_t> map(pi.map_.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = sigma.map_[pi.map_[i]];
    return Permutation(std::move(map));
}

Permutation inverse(const Permutation& p) {
    std::vector<std::uint8_t> map(p.map_.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[p.map_[i]] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(map));
}

Permutation conjugate(const Permutation& x, const Permutation& p) {
    require_same_degree(x, p);
    return compose(compose(x, p), inverse(x));
}

Partition cycle_type(const Permutation& p) {
    const auto images = p.zero_based();
    std::vector<bool> seen(images.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (std::size_t i = start; !seen[i]; i = images[i]) {
            seen[i] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

bool is_cyclic(const Permutation& p) {
    const auto images = p.zero_based();
    std::size_t len = 1;
    for (auto i = images[0]; i != 0; i = images[i]) ++len;
    return len == images.size();
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > kMaxRankableDegree) throw std::out_of_range("factorial argument out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t rank_of(const Permutation& p) {
    const auto images = p.zero_based();
    const int n = p.degree();
    if (n > kMaxRankableDegree) throw std::out_of_range("degree too large to rank");
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < n; ++j)
            if (images[static_cast<std::size_t>(j)] < images[static_cast<std::size_t>(i)]) ++smaller_later;
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_later);
    }
    return r;
}

Permutation unrank(int n, std::uint64_t r) {
    if (n < 1 || n > kMaxRankableDegree) throw std::out_of_range("degree out of range for unrank");
    if (r >= factorial(n))
        throw std::out_of_range("rank " + std::to_string(r) + " out of range for degree " +
                                std::to_string(n));
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(n - i);
        digits[static_cast<std::size_t>(i)] = static_cast<int>(r % base);
        r /= base;
    }
    std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), std::uint8_t{0});
    std::vector<std::uint8_t> map;
    map.reserve(static_cast<std::size_t>(n));
    for (int d : digits) {
        map.push_back(pool[static_cast<std::size_t>(d)]);
        pool.erase(pool.begin() + d);
    }
    return Permutation(std::move(map));
}

std::vector<Permutation> enumerate_sn(int n, int max_degree) {
    if (n < 1 || n > max_degree || n > kMaxRankableDegree)
        throw std::out_of_range("enumerate_sn: n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(std::min(max_degree, kMaxRankableDegree)) + "]");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Permutation> enumerate_cyclic(int n) {
    if (n < 1 || n > kMaxRankableDegree) throw std::out_of_range("enumerate_cyclic: n out of range");
    // Every n-cycle is (1 a_2 ... a_n) for a unique arrangement a of {2..n}.
    std::vector<int> tail(static_cast<std::size_t>(n - 1));
    std::iota(tail.begin(), tail.end(), 2);
    std::vector<Permutation> out;
    out.reserve(factorial(n - 1));
    do {
        std::vector<int> cycle{1};
        cycle.insert(cycle.end(), tail.begin(), tail.end());
        out.push_back(Permutation::from_cycles(n, {cycle}));
    } while (std::next_permutation(tail.begin(), tail.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Permutation& p) {
    std::string s = "[";
    for (int i = 1; i <= p.degree(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(p(i));
    }
    return s + "]";
}

}  // namespace permrank

namespace nlohmann {

permrank::Permutation adl_serializer<permrank::Permutation>::from_json(const json& j) {
    return permrank::Permutation::from_images(j.get<std::vector<int>>());
}

void adl_serializer<permrank::Permutation>::to_json(json& j, const permrank::Permutation& p) {
    j = p.images();
}

}  // namespace nlohmann
