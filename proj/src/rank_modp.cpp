#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "permrank/permmatrix.hpp"

namespace permrank {

namespace {

constexpr std::size_t kBlockRows = 64;

struct Field {
    std::uint32_t p;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    }

    std::uint32_t inv(std::uint32_t a) const {
        std::uint32_t result = 1;
        for (std::uint32_t e = p - 2; e; e >>= 1, a = mul(a, a))
            if (e & 1) result = mul(result, a);
        return result;
    }
};

// dst[j] += w * src[j] mod p for j in [from, n). Shoup's precomputed quotient
// keeps everything in 32-bit lanes: w * y - floor(w' * y / 2^32) * p lies in
// [0, 2p) and 2p < 2^32.
void axpy(std::uint32_t* __restrict dst, const std::uint32_t* __restrict src, std::size_t from, std::size_t n,
          std::uint32_t w, std::uint32_t p) {
    const auto w_shoup = static_cast<std::uint32_t>((std::uint64_t{w} << 32) / p);
    for (std::size_t j = from; j < n; ++j) {
        const std::uint32_t y = src[j];
        const auto q = static_cast<std::uint32_t>((std::uint64_t{w_shoup} * y) >> 32);
        std::uint32_t r = w * y - q * p;
        r = r >= p ? r - p : r;
        std::uint32_t t = dst[j] + r;
        dst[j] = t >= p ? t - p : t;
    }
}

struct BasisRow {
    std::size_t pivot;
    std::vector<std::uint32_t> values;  // values[pivot] == 1, zero before pivot
};

void reduce(std::vector<std::uint32_t>& v, const std::vector<BasisRow>& basis, std::size_t first,
            std::size_t last, std::uint32_t p) {
    const std::size_t n = v.size();
    for (std::size_t k = first; k < last; ++k) {
        const BasisRow& b = basis[k];
        const std::uint32_t c = v[b.pivot];
        if (c != 0) axpy(v.data(), b.values.data(), b.pivot, n, p - c, p);
    }
}

}  // namespace

std::size_t rank_mod_p(const BinaryMatrix& m, std::uint32_t p, int threads) {
    if (p <= (1U << 29) || p >= (1U << 31) || !is_prime_u32(p))
        throw std::invalid_argument("rank_mod_p: modulus must be a prime in (2^29, 2^31)");
    const Field field{p};
    const std::size_t cols = m.cols();
    threads = std::max(1, threads);

    std::vector<BasisRow> basis;
    std::vector<std::vector<std::uint32_t>> block;

    for (std::size_t start = 0; start < m.rows(); start += kBlockRows) {
        const std::size_t count = std::min(kBlockRows, m.rows() - start);
        block.assign(count, std::vector<std::uint32_t>(cols, 0));
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t c = 0; c < cols; ++c) block[i][c] = m.get(start + i, c);

        // Against the basis as it stood before this block: rows are independent.
        const std::size_t settled = basis.size();
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < count; i = next++) reduce(block[i], basis, 0, settled, p);
        };
        {
            std::vector<std::jthread> pool;
            const auto extra = static_cast<std::size_t>(threads - 1);
            for (std::size_t t = 0; t < std::min(extra, count); ++t) pool.emplace_back(worker);
            worker();
        }

        // Merge in row order so the basis is the same for every worker count.
        for (auto& v : block) {
            reduce(v, basis, settled, basis.size(), p);
            const auto nz = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
            if (nz == v.end()) continue;
            const auto pivot = static_cast<std::size_t>(nz - v.begin());
            const std::uint32_t scale = field.inv(*nz);
            for (std::size_t j = pivot; j < cols; ++j) v[j] = field.mul(v[j], scale);
            basis.push_back({pivot, std::move(v)});
        }
        if (basis.size() == cols) break;
    }
    return basis.size();
}

}  // namespace permrank
