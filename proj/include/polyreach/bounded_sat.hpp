// Exhaustive search for a small poset model satisfying a formula.
//
// A miss is not a proof of unsatisfiability; the searched bound is reported.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyreach/evaluate.hpp"
#include "polyreach/formula.hpp"
#include "polyreach/model.hpp"

namespace polyreach {

struct SatOptions {
    std::size_t max_worlds = 4;
    Execution execution = Execution::Parallel;
    // Keep one poset per isomorphism class (up to 6 worlds).
    bool isomorphism_reduction = true;
};

struct SatWitness {
    PreorderModel model;
    WorldId world;
};

struct SatResult {
    std::optional<SatWitness> witness;
    std::size_t searched_bound = 0;
    std::uint64_t models_checked = 0;
};

SatResult bounded_sat(const Formula& f, const SatOptions& options);

// Order relations (row bitmasks, row i = {j : i <= j}) of all posets on n
// labeled worlds compatible with the index order, deduplicated, optionally
// reduced up to isomorphism. Sorted for a deterministic search order.
std::vector<std::vector<std::uint8_t>> enumerate_poset_frames(std::size_t n, bool isomorphism_reduction);

} // namespace polyreach
