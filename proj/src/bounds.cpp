#include "permrank/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace permrank {

namespace {

// 55 significant digits each; both are scaled by the same 10^54, which cancels.
const char* const kPiScaled = "3141592653589793238462643383279502884197169399375105821";
const char* const kSqrt3Scaled = "1732050807568877293527446341505872366942805253810380628";

void require_positive(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
}

template <typename Term>
mpz_class block_sum(int n, Term term) {
    mpz_class total = 0;
    for (int k = 1; k <= n; ++k) total += binomial(n, k - 1) * binomial(n, k) * term(k);
    return total;
}

}  // namespace

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

mpz_class bound_new(int n) {
    require_positive(n, "bound_new");
    return block_sum(n, [](int k) { return binomial(2 * k - 2, k - 1); });
}

mpz_class bound_earlier(int n) {
    require_positive(n, "bound_earlier");
    return block_sum(n, [](int k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
        return p;
    });
}

mpz_class bound_upper(int n) {
    require_positive(n, "bound_upper");
    return block_sum(n, [](int k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
        return f;
    });
}

mpz_class bound_from_ranks(int n, const std::vector<mpz_class>& ranks) {
    require_positive(n, "bound_from_ranks");
    if (ranks.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("bound_from_ranks: need a rank for every k in 1..n");
    return block_sum(n, [&](int k) { return ranks[static_cast<std::size_t>(k - 1)]; });
}

mpz_class dfa_bound(int n) {
    require_positive(n, "dfa_bound");
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n));
    return n * (a - b) + 1;
}

mpz_class nfa_bound(int n) {
    require_positive(n, "nfa_bound");
    return binomial(2L * n, n + 1L);
}

AsymptoticRatio asymptotic_ratio(int n, int digits) {
    require_positive(n, "asymptotic_ratio");
    if (digits < 1 || digits > kMaxRatioDigits)
        throw std::invalid_argument("asymptotic_ratio: digits must be in [1, " +
                                    std::to_string(kMaxRatioDigits) + "]");
    const mpz_class pi(kPiScaled), sqrt3(kSqrt3Scaled);
    mpz_class nine_pow;
    mpz_ui_pow_ui(nine_pow.get_mpz_t(), 9, static_cast<unsigned long>(n));

    // r < 1 for every n, so 10^(digits + guard) leaves at least `digits`
    // significant decimal digits once the leading zeros are skipped.
    const int guard = 10;
    const int fraction_digits = digits + guard;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(fraction_digits));
    const mpz_class numerator = bound_new(n) * 8 * n * pi * scale;
    const mpz_class denominator = 3 * sqrt3 * nine_pow;
    const mpz_class scaled = numerator / denominator;

    std::string frac = scaled.get_str();
    std::string int_part = "0";
    if (frac.size() > static_cast<std::size_t>(fraction_digits)) {
        int_part = frac.substr(0, frac.size() - static_cast<std::size_t>(fraction_digits));
        frac = frac.substr(frac.size() - static_cast<std::size_t>(fraction_digits));
    } else {
        frac.insert(0, static_cast<std::size_t>(fraction_digits) - frac.size(), '0');
    }

    // Truncate to `digits` significant digits.
    std::string decimal;
    int kept = 0;
    if (int_part != "0") {
        decimal = int_part;
        kept = static_cast<int>(int_part.size());
    } else {
        decimal = "0";
    }
    std::string tail;
    for (char c : frac) {
        if (kept >= digits) break;
        tail += c;
        if (kept > 0 || c != '0') ++kept;
    }
    if (!tail.empty()) decimal += "." + tail;

    AsymptoticRatio out;
    out.n = n;
    out.digits = digits;
    out.decimal = decimal;
    out.value = std::stod(decimal);
    const mpz_class one = scale;
    mpz_class diff = scaled - one;
    if (diff < 0) diff = -diff;
    // diff / 10^fraction_digits as a double; diff has at most fraction_digits + 1 digits.
    out.deviation = mpz_get_d(diff.get_mpz_t()) / mpz_get_d(scale.get_mpz_t());
    return out;
}

std::vector<BoundRow> table(int n_max) {
    require_positive(n_max, "table");
    std::vector<BoundRow> rows;
    for (int n = 1; n <= n_max; ++n) rows.push_back({n, bound_earlier(n), bound_new(n), bound_upper(n)});
    return rows;
}

TableFormat parse_table_format(const std::string& text) {
    if (text == "csv") return TableFormat::Csv;
    if (text == "json") return TableFormat::Json;
    if (text == "markdown") return TableFormat::Markdown;
    if (text == "plain") return TableFormat::Plain;
    throw std::invalid_argument("unknown format '" + text + "' (expected csv, json, markdown or plain)");
}

std::string format_table(const std::vector<BoundRow>& rows, TableFormat format) {
    std::ostringstream out;
    switch (format) {
        case TableFormat::Csv:
            out << "n,earlier_lower,new_lower,upper\n";
            for (const auto& r : rows)
                out << r.n << ',' << r.earlier_lower << ',' << r.new_lower << ',' << r.upper << '\n';
            break;
        case TableFormat::Json: {
            auto arr = nlohmann::json::array();
            for (const auto& r : rows)
                arr.push_back({{"n", r.n},
                               {"earlier_lower", r.earlier_lower.get_str()},
                               {"new_lower", r.new_lower.get_str()},
                               {"upper", r.upper.get_str()}});
            out << arr.dump(2) << '\n';
            break;
        }
        case TableFormat::Markdown:
            out << "| n | earlier lower bound | **new lower bound** | upper bound |\n"
                << "|---|---:|---:|---:|\n"
                << "|   | sum C(n,k-1) C(n,k) 2^(k-1) | sum C(n,k-1) C(n,k) C(2k-2,k-1) | sum C(n,k-1) C(n,k) k! |\n";
            for (const auto& r : rows)
                out << "| " << r.n << " | " << r.earlier_lower << " | " << r.new_lower << " | " << r.upper << " |\n";
            break;
        case TableFormat::Plain:
            for (const auto& r : rows)
                out << r.n << ' ' << r.earlier_lower << ' ' << r.new_lower << ' ' << r.upper << '\n';
            break;
    }
    return out.str();
}

}  // namespace permrank
