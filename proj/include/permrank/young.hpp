#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace permrank {

/// Largest weight accepted by enumerate_syt.
inline constexpr int kMaxSytEnumerationWeight = 12;

/// Weakly decreasing positive parts. Used both as a Young diagram shape and
/// as a cycle type. The empty partition (weight 0) is valid.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument if parts are not positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "4,1,1". An empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    /// Row length, 0 past the last row.
    int row(int i) const {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    /// Conjugate (transposed) partition.
    Partition transpose() const;

    bool contains_cell(int row, int col) const { return row >= 0 && col >= 0 && col < this->row(row); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::string to_string(const Partition& p);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

/// All partitions of n in reverse-lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

/// True iff every part after the first equals 1. Throws on the empty partition.
bool is_hook(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda, by the hook-length formula.
mpz_class syt_count(const Partition& lambda);

/// A standard Young tableau: rows of entries 1..n.
using Tableau = std::vector<std::vector<int>>;

/// Every standard filling of lambda, by direct search. Intended for small
/// shapes; throws std::invalid_argument above kMaxSytEnumerationWeight.
std::vector<Tableau> enumerate_syt(const Partition& lambda);

struct Cell {
    int row = 0;  // 0-based
    int col = 0;  // 0-based
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A border strip of a diagram: an edge-connected run of rim cells with no
/// 2x2 square, whose removal leaves a diagram.
struct RimHook {
    Partition parent;
    std::vector<Cell> cells;  // from top-right to bottom-left
    int leg_length = 0;       // rows touched minus one
    Partition residual;       // parent with the cells removed

    int size() const { return static_cast<int>(cells.size()); }
};

/// All rim hooks of exactly `length` cells. Each is found by starting at the
/// last cell of a row and walking the rim toward the bottom-left.
std::vector<RimHook> rim_hooks(const Partition& lambda, int length);

/// lambda with the cells of xi removed. Throws std::invalid_argument if xi
/// is not a rim hook of lambda.
Partition remove_rim_hook(const Partition& lambda, const RimHook& xi);

}  // namespace permrank
