// Up-down morphisms between finite models and the pullback property.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyreach/formula.hpp"
#include "polyreach/model.hpp"

namespace polyreach {

using WorldMap = std::vector<WorldId>;

struct MorphismCheck {
    bool ok = true;
    // "atom", "forth" or "back" on failure.
    std::string clause;
    std::string witness;
};

// (atom) w in [[p]] iff f(w) in [[p]]' for atoms of either model;
// (forth) w <= u >= v implies f(w) <= f(u) >= f(v);
// (back) f(w) <= u' >= v' implies an up-down path from w with middles in
// f^-1(u') ending in f^-1(v').
// Throws ModelError if f is not a total map into the target.
MorphismCheck is_updown_morphism(const WorldMap& f, const PreorderModel& m, const PreorderModel& target);

struct PullbackCheck {
    bool ok = true;
    std::optional<Formula> failing;
    std::string witness;
};

// [[phi]] == f^-1([[phi]]') for each formula. Throws ModelError if f is not
// an up-down morphism.
PullbackCheck pullback_check(const WorldMap& f, const PreorderModel& m, const PreorderModel& target,
                             const std::vector<Formula>& formulas);

WorldMap identity_map(std::size_t n);

} // namespace polyreach
