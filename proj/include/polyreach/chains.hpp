#pragma once

#include <string>
#include <vector>

#include "polyreach/model.hpp"

namespace polyreach {

// Non-empty chains of a poset, each listed bottom to top, ordered by size
// and then lexicographically by world index. Throws for non-posets.
std::vector<std::vector<WorldId>> enumerate_chains(const PreorderModel& poset);

// Member names sorted and joined by '+'.
std::string set_label(const PreorderModel& m, const std::vector<WorldId>& worlds);

} // namespace polyreach
