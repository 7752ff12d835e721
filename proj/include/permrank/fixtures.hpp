#pragma once

#include <string_view>
#include <vector>

#include "permrank/bounds.hpp"
#include "permrank/characters.hpp"

namespace permrank::fixtures {

/// Raw contents of the data files compiled into the library.
std::string_view table1_csv();
std::string_view character_table_csv(int n);  // n = 3 or 4

/// Parsed reference bound table, rows n = 1..10.
std::vector<BoundRow> table1_reference();

/// Parsed reference character table for S_3 or S_4.
CharacterTable character_table_reference(int n);

}  // namespace permrank::fixtures
