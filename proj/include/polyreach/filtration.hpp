// Filtration of a finite model through an adequate set, the chi formulas of
// its classes, and cut.
#pragma once

#include <string>
#include <vector>

#include "polyreach/adequate.hpp"
#include "polyreach/model.hpp"

namespace polyreach {

struct ClassModel {
    // Worlds are classes, named by their sorted member names joined by '+'.
    PreorderModel model;
    // Source world -> class.
    std::vector<std::size_t> class_map;
    // Sigma-theory of each class.
    std::vector<FormulaSet> theories;
    // Source worlds of each class, ascending.
    std::vector<std::vector<WorldId>> members;
    AdequateSet sigma;
};

// Classes are Sigma-theories; T <= S iff every []f in T's theory is in S's
// theory; atoms of Sigma valued by theory membership.
ClassModel filtrate(const PreorderModel& m, const AdequateSet& sigma);

// Conjunction of the theory in formula order; T when empty.
Formula chi(const FormulaSet& theory);

// Disjunction of chi over the classes R^phi-reachable from class u, with phi
// read by theory membership; F when there are none.
Formula chi_disjunction(const ClassModel& cm, std::size_t u, const Formula& phi);

struct ChiLemmaCheck {
    bool diamond_ok = true;
    bool box_ok = true;
    bool ok() const noexcept { return diamond_ok && box_ok; }
    Formula chi_formula;
};

// <>(phi & chi) -> chi and phi & chi -> [](phi -> chi), both checked for
// validity in the source model of `cm`.
ChiLemmaCheck chi_lemma_check(const PreorderModel& m, const ClassModel& cm, std::size_t u, const Formula& phi);

// Identity plus the strict part of the order; always a poset.
PreorderModel cut(const PreorderModel& m);

// Distinct world labels for groups of source worlds: sorted names joined by
// '+', falling back to c0, c1, ... on collisions.
std::vector<std::string> group_labels(const PreorderModel& m, const std::vector<std::vector<WorldId>>& groups,
                                      const std::string& fallback_prefix);

} // namespace polyreach
