#include "permrank/permmatrix.hpp"

#include <bit>
#include <fstream>
#include <random>
#include <set>

#include "permrank/group_algebra.hpp"
#include "permrank/perm.hpp"

namespace permrank {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols, int degree)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), degree_(degree), bits_(rows * stride_, 0) {}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] != 0 && rows[r][c] != 1) throw std::invalid_argument("from_rows: entries must be 0 or 1");
            m.set(r, c, rows[r][c] == 1);
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t order) {
    BinaryMatrix m(order, order);
    for (std::size_t i = 0; i < order; ++i) m.set(i, i);
    return m;
}

std::size_t BinaryMatrix::row_sum(std::size_t r) const {
    std::size_t s = 0;
    for (std::uint64_t w : row_words(r)) s += static_cast<std::size_t>(std::popcount(w));
    return s;
}

std::size_t BinaryMatrix::col_sum(std::size_t c) const {
    std::size_t s = 0;
    for (std::size_t r = 0; r < rows_; ++r) s += get(r, c);
    return s;
}

std::size_t BinaryMatrix::count_ones() const {
    std::size_t s = 0;
    for (std::uint64_t w : bits_) s += static_cast<std::size_t>(std::popcount(w));
    return s;
}

bool BinaryMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

namespace {

void require_matrix_degree(int n, int max, const char* what) {
    if (n < 1 || n > max)
        throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(max) + "]");
}

// Row pi has its ones at c o f(pi) for every n-cycle c.
template <typename RowMap>
BinaryMatrix build_cyclic_product_matrix(int n, RowMap row_factor) {
    require_matrix_degree(n, kMaxMatrixDegree, "matrix constructor");
    const auto order = factorial(n);
    const std::vector<Permutation> cycles = enumerate_cyclic(n);
    BinaryMatrix m(order, order, n);
    for (std::uint64_t r = 0; r < order; ++r) {
        const Permutation factor = row_factor(unrank(n, r));
        for (const Permutation& c : cycles) m.set(r, rank_of(compose(c, factor)));
    }
    return m;
}

}  // namespace

BinaryMatrix build_p(int n) {
    return build_cyclic_product_matrix(n, [](const Permutation& pi) { return inverse(pi); });
}

BinaryMatrix build_q(int n) {
    return build_cyclic_product_matrix(n, [](const Permutation& pi) { return pi; });
}

BinaryMatrix operator_matrix(int n) {
    require_matrix_degree(n, kMaxOperatorDegree, "operator_matrix");
    const GroupAlgebraElement q = q_n(n);
    const auto order = factorial(n);
    BinaryMatrix m(order, order, n);
    for (std::uint64_t g = 0; g < order; ++g) {
        const auto image = multiply(q, GroupAlgebraElement::basis(unrank(n, g)));
        for (const auto& [h, coeff] : image.terms()) {
            if (coeff != 1) throw std::logic_error("operator_matrix: coefficient other than 0 or 1");
            m.set(h, g);
        }
    }
    return m;
}

std::string to_string(RankMethod m) {
    switch (m) {
        case RankMethod::Auto: return "auto";
        case RankMethod::Exact: return "exact";
        case RankMethod::Modular: return "modp";
    }
    return "auto";
}

RankMethod parse_rank_method(const std::string& text) {
    if (text == "auto") return RankMethod::Auto;
    if (text == "exact") return RankMethod::Exact;
    if (text == "modp") return RankMethod::Modular;
    throw std::invalid_argument("unknown rank method '" + text + "' (expected auto, exact or modp)");
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t small : {2U, 3U, 5U, 7U, 11U}) {
        if (n % small == 0) return n == small;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return a * b % n; };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        for (a %= n; e; e >>= 1, a = mulmod(a, a))
            if (e & 1) r = mulmod(r, a);
        return r;
    };
    std::uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Bases 2, 3, 5, 7, 11 are deterministic below 2,152,302,898,747.
    for (std::uint64_t a : {2U, 3U, 5U, 7U, 11U}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint32_t> random_primes(int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint32_t> dist((1U << 29) + 1, (1U << 31) - 1);
    std::set<std::uint32_t> seen;
    std::vector<std::uint32_t> primes;
    while (static_cast<int>(primes.size()) < count) {
        const std::uint32_t candidate = dist(gen) | 1U;
        if (candidate < (1U << 31) && is_prime_u32(candidate) && seen.insert(candidate).second)
            primes.push_back(candidate);
    }
    return primes;
}

RankCertificate rank_certified(int n, const RankConfig& config) {
    require_matrix_degree(n, kMaxMatrixDegree, "rank_certified");
    RankMethod method = config.method;
    if (method == RankMethod::Auto) method = n <= kMaxOperatorDegree ? RankMethod::Exact : RankMethod::Modular;
    if (method == RankMethod::Exact && factorial(n) > kMaxExactOrder)
        throw MatrixTooLarge("exact rank at n = " + std::to_string(n) + " (order " +
                             std::to_string(factorial(n)) + ") is infeasible; use --method modp");
    if (n == 8 && !config.allow_degree8)
        throw std::out_of_range("rank at n = 8 needs an explicit opt-in (order 40320)");

    const BinaryMatrix p = build_p(n);
    RankCertificate cert;
    cert.n = n;
    if (method == RankMethod::Exact) {
        cert.rank = rank_exact(p);
        cert.method = "exact-fraction-free";
        cert.note = "exact rank over Q";
        return cert;
    }

    if (config.num_primes < 1) throw std::invalid_argument("rank_certified: need at least one prime");
    for (std::uint32_t prime : random_primes(config.num_primes, config.seed))
        cert.trials.push_back({prime, rank_mod_p(p, prime, config.threads)});
    for (const PrimeTrial& t : cert.trials) {
        if (t.rank != cert.trials.front().rank) {
            std::string values;
            for (const PrimeTrial& u : cert.trials)
                values += " p=" + std::to_string(u.prime) + ":" + std::to_string(u.rank);
            throw PrimeDisagreement("modular ranks disagree:" + values, cert.trials);
        }
    }
    cert.rank = cert.trials.front().rank;
    cert.method = "modular-multiprime";
    cert.note = "rank over Q >= " + std::to_string(cert.rank) +
                " (modular rank is a lower bound); equality is probabilistic across " +
                std::to_string(cert.trials.size()) + " random primes";
    return cert;
}

void dump_pbm(const BinaryMatrix& m, const std::filesystem::path& path, PbmFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << (format == PbmFormat::Raw ? "P4" : "P1") << '\n' << m.cols() << ' ' << m.rows() << '\n';
    if (format == PbmFormat::Plain) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << (m.get(r, c) ? '1' : '0');
            out << '\n';
        }
    } else {
        std::vector<char> line((m.cols() + 7) / 8);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::fill(line.begin(), line.end(), 0);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m.get(r, c)) line[c / 8] = static_cast<char>(line[c / 8] | (0x80 >> (c % 8)));
            out.write(line.data(), static_cast<std::streamsize>(line.size()));
        }
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

BinaryMatrix read_pbm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string magic;
    std::size_t cols = 0, rows = 0;
    in >> magic >> cols >> rows;
    if (!in || (magic != "P1" && magic != "P4")) throw std::runtime_error("not a PBM file: " + path.string());
    BinaryMatrix m(rows, cols);
    if (magic == "P1") {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                char ch = 0;
                in >> ch;
                if (ch != '0' && ch != '1') throw std::runtime_error("bad P1 pixel in " + path.string());
                m.set(r, c, ch == '1');
            }
        return m;
    }
    in.get();  // single whitespace before raster
    std::vector<char> line((cols + 7) / 8);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!in.read(line.data(), static_cast<std::streamsize>(line.size())))
            throw std::runtime_error("truncated P4 raster in " + path.string());
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, (static_cast<unsigned char>(line[c / 8]) >> (7 - c % 8)) & 1U);
    }
    return m;
}

}  // namespace permrank
