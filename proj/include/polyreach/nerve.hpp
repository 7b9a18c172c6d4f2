// Nerve of a poset model: non-empty chains ordered by inclusion, valued by
// their maximum.
#pragma once

#include <vector>

#include "polyreach/model.hpp"

namespace polyreach {

struct NerveModel {
    PreorderModel model;
    // chains[c] lists the source worlds of nerve world c, bottom to top.
    std::vector<std::vector<WorldId>> chains;

    // max : N(W) -> W
    std::vector<WorldId> max_map() const;
};

// Throws ModelError for non-posets.
NerveModel nerve(const PreorderModel& poset);

} // namespace polyreach
