#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace permrank {

class Partition;

/// Largest degree for which the whole of S_n may be enumerated.
inline constexpr int kDefaultMaxDegree = 8;

/// A bijection of {1..n}. Stored 0-based; all I/O is 1-based.
class Permutation {
public:
    /// Identity of degree n (n >= 1).
    static Permutation identity(int n);

    /// From 1-based images, e.g. {2,3,1}. Throws std::invalid_argument unless
    /// the images form a bijection of {1..n}.
    static Permutation from_images(std::span<const int> images);
    static Permutation from_images(std::initializer_list<int> images);

    /// From disjoint cycles given with 1-based points; unlisted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(map_.size()); }

    /// Image of the 1-based point i, 1-based.
    int operator()(int i) const { return map_.at(static_cast<std::size_t>(i - 1)) + 1; }

    /// 0-based images.
    std::span<const std::uint8_t> zero_based() const { return map_; }

    std::vector<int> images() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<std::uint8_t> map) : map_(std::move(map)) {}
    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
    friend Permutation unrank(int, std::uint64_t);

    std::vector<std::uint8_t> map_;
};

/// sigma after pi: compose(sigma, pi)(i) = sigma(pi(i)).
Permutation compose(const Permutation& sigma, const Permutation& pi);
Permutation inverse(const Permutation& p);

/// x o p o x^-1.
Permutation conjugate(const Permutation& x, const Permutation& p);

Partition cycle_type(const Permutation& p);

/// True iff p is a single cycle through all n points.
bool is_cyclic(const Permutation& p);

std::uint64_t factorial(int n);

/// Position of p in the lexicographic order of image sequences (Lehmer code).
std::uint64_t rank_of(const Permutation& p);

/// Inverse of rank_of. Throws std::out_of_range unless r < n!.
Permutation unrank(int n, std::uint64_t r);

/// All of S_n in lexicographic order; this order indexes every matrix built here.
std::vector<Permutation> enumerate_sn(int n, int max_degree = kDefaultMaxDegree);

/// The (n-1)! permutations consisting of one n-cycle, in lexicographic order.
std::vector<Permutation> enumerate_cyclic(int n);

std::string to_string(const Permutation& p);

}  // namespace permrank

namespace nlohmann {
/// Permutations serialize as arrays of 1-based images, e.g. [2,3,1].
template <>
struct adl_serializer<permrank::Permutation> {
    static permrank::Permutation from_json(const json& j);
    static void to_json(json& j, const permrank::Permutation& p);
};
}  // namespace nlohmann
