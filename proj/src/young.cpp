#include "permrank/young.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace permrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto token = text.substr(0, comma);
        int value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        while (first != last && *first == ' ') ++first;
        while (last != first && *(last - 1) == ' ') --last;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || first == last)
            throw std::invalid_argument("cannot parse partition part '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

Partition Partition::transpose() const {
    std::vector<int> cols;
    for (int c = 0; c < row(0); ++c) {
        int height = 0;
        while (height < length() && parts_[static_cast<std::size_t>(height)] > c) ++height;
        cols.push_back(height);
    }
    return Partition(std::move(cols));
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

bool is_hook(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("is_hook: empty partition");
    return lambda.length() == 1 || lambda[1] == 1;
}

mpz_class syt_count(const Partition& lambda) {
    const Partition columns = lambda.transpose();
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(lambda.weight()));
    mpz_class hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (columns[j] - i) - 1;
    return numerator / hooks;
}

namespace {

void syt_rec(const Partition& shape, std::vector<int>& filled, Tableau& current, int next,
             std::vector<Tableau>& out) {
    if (next > shape.weight()) {
        out.push_back(current);
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        const auto ru = static_cast<std::size_t>(r);
        const bool room = filled[ru] < shape[r];
        const bool above_ok = r == 0 || filled[ru - 1] > filled[ru];
        if (!room || !above_ok) continue;
        current[ru].push_back(next);
        ++filled[ru];
        syt_rec(shape, filled, current, next + 1, out);
        --filled[ru];
        current[ru].pop_back();
    }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& lambda) {
    if (lambda.weight() > kMaxSytEnumerationWeight)
        throw std::invalid_argument("enumerate_syt: weight " + std::to_string(lambda.weight()) +
                                    " exceeds " + std::to_string(kMaxSytEnumerationWeight));
    std::vector<Tableau> out;
    std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
    Tableau current(static_cast<std::size_t>(lambda.length()));
    syt_rec(lambda, filled, current, 1, out);
    return out;
}

std::vector<RimHook> rim_hooks(const Partition& lambda, int length) {
    if (length < 1) throw std::invalid_argument("rim_hooks: length must be positive");
    std::vector<RimHook> out;
    if (length > lambda.weight()) return out;

    for (int top = 0; top < lambda.length(); ++top) {
        std::vector<Cell> cells;
        Cell at{top, lambda[top] - 1};
        cells.push_back(at);
        while (static_cast<int>(cells.size()) < length) {
            if (lambda.contains_cell(at.row + 1, at.col)) {
                ++at.row;
            } else if (at.col > 0) {
                --at.col;
            } else {
                break;
            }
            cells.push_back(at);
        }
        if (static_cast<int>(cells.size()) != length) continue;

        std::vector<int> rows = lambda.parts();
        for (const Cell& c : cells) --rows[static_cast<std::size_t>(c.row)];
        bool valid = true;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i] > rows[i - 1]) valid = false;
        if (!valid) continue;
        while (!rows.empty() && rows.back() == 0) rows.pop_back();

        RimHook hook;
        hook.parent = lambda;
        hook.leg_length = cells.back().row - cells.front().row;
        hook.cells = std::move(cells);
        hook.residual = Partition(std::move(rows));
        out.push_back(std::move(hook));
    }
    return out;
}

Partition remove_rim_hook(const Partition& lambda, const RimHook& xi) {
    if (xi.parent == lambda && xi.size() >= 1) {
        for (const RimHook& h : rim_hooks(lambda, xi.size()))
            if (h.cells == xi.cells) return h.residual;
    }
    throw std::invalid_argument("remove_rim_hook: not a rim hook of " + to_string(lambda));
}

}  // namespace permrank
