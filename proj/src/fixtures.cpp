#include "permrank/fixtures.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace permrank::fixtures {

namespace embedded {
extern const std::string_view kTable1;
extern const std::string_view kCharTableS3;
extern const std::string_view kCharTableS4;
}  // namespace embedded

namespace {

std::vector<std::string> data_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, sep);) fields.push_back(f);
    return fields;
}

}  // namespace

std::string_view table1_csv() { return embedded::kTable1; }

std::string_view character_table_csv(int n) {
    if (n == 3) return embedded::kCharTableS3;
    if (n == 4) return embedded::kCharTableS4;
    throw std::out_of_range("no embedded character table for n = " + std::to_string(n));
}

std::vector<BoundRow> table1_reference() {
    const auto lines = data_lines(table1_csv());
    std::vector<BoundRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != 4) throw std::runtime_error("malformed table fixture line: " + lines[i]);
        rows.push_back({std::stoi(f[0]), mpz_class(f[1]), mpz_class(f[2]), mpz_class(f[3])});
    }
    return rows;
}

CharacterTable character_table_reference(int n) {
    const auto lines = data_lines(character_table_csv(n));
    CharacterTable t;
    t.n = n;
    const auto header = split(lines.at(0), ';');
    for (std::size_t c = 1; c < header.size(); ++c) t.classes.push_back(Partition::parse(header[c]));
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto f = split(lines[r], ';');
        t.irreducibles.push_back(Partition::parse(f.at(0)));
        auto& row = t.values.emplace_back();
        for (std::size_t c = 1; c < f.size(); ++c) row.emplace_back(f[c]);
    }
    return t;
}

}  // namespace permrank::fixtures
