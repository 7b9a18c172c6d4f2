// Truth sets of formulas on finite preorder models.
//
// gamma(f, g) holds at w iff some up-down path w = w0 <= w1 > w2 < ... >= wk
// ends in [[g]] with every intermediate point in [[f]]. Two independent
// routes compute it: the least fixpoint of the reachability relation
// (reach_oracle, the serial reference) and the comparability-component
// shortcut used by default.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyreach/formula.hpp"
#include "polyreach/model.hpp"

namespace polyreach {

enum class ReachMethod { Components, Fixpoint };
enum class Execution { Serial, Parallel };

struct EvalOptions {
    ReachMethod reach = ReachMethod::Components;
    Execution execution = Execution::Serial;
};

using Valuation = std::map<std::string, WorldSet>;

WorldSet evaluate(const PreorderModel& m, const Formula& f, const EvalOptions& opts = {});

// Evaluates on the frame of `m` under `valuation`, ignoring m's own valuation.
WorldSet evaluate(const PreorderModel& m, const Valuation& valuation, const Formula& f,
                  const EvalOptions& opts = {});

bool holds_at(const PreorderModel& m, const Formula& f, WorldId w, const EvalOptions& opts = {});

// [[f]] == W.
bool is_valid(const PreorderModel& m, const Formula& f, const EvalOptions& opts = {});

// {w : every v >= w lies in a}.
WorldSet box_kernel(const PreorderModel& m, const WorldSet& a, Execution exec = Execution::Serial);

// rows[w] = {v : w R v}.
using Relation = std::vector<WorldSet>;

// Least relation R with w R v whenever w <= u >= v for some u in a, closed
// under composition through points of a.
Relation reach_oracle(const PreorderModel& m, const WorldSet& a);

// {w : w R v for some v in b}, via reach_oracle.
WorldSet reach_fixpoint(const PreorderModel& m, const WorldSet& a, const WorldSet& b);

// Same set via connected components of the comparability graph on a.
WorldSet reach_components(const PreorderModel& m, const WorldSet& a, const WorldSet& b,
                          Execution exec = Execution::Serial);

struct UpDownPath {
    std::vector<WorldId> worlds;
};

// Shortest up-down path from w ending in b with all intermediate points in a.
std::optional<UpDownPath> witness_path(const PreorderModel& m, WorldId w, const WorldSet& a,
                                       const WorldSet& b);

// Up-down shape (even length k >= 2, strict alternation inside) and all
// intermediate points in a.
bool check_path(const PreorderModel& m, const UpDownPath& p, const WorldSet& a);

std::string format_path(const PreorderModel& m, const UpDownPath& p);

} // namespace polyreach
