// Subformula closure and adequate sets.
//
// A set of formulas is adequate when it is closed under subformulas and
// single negations, and every gamma(f, g) member comes with
// [](f -> gamma(f, g)) and <>(f & gamma(f, g)).
#pragma once

#include <optional>
#include <string>

#include "polyreach/formula.hpp"

namespace polyreach {

struct AdequateSet {
    FormulaSet members;
    FormulaSet origin;

    bool contains(const Formula& f) const { return members.count(f) != 0; }
    std::size_t size() const noexcept { return members.size(); }
};

FormulaSet subformulas(const FormulaSet& gamma);
FormulaSet subformulas(const Formula& f);

// Smallest adequate set containing `gamma`.
AdequateSet adequate_closure(const FormulaSet& gamma);

// Smallest adequate set containing sigma, <>(~f & <>f) for every <>f member
// (including ~[]g read as <>~g) and, for every gamma(f, g) member, <>(f & ~g)
// together with <>(f & g) and its companion <>(~(f & g) & <>(f & g)).
AdequateSet hat_extension(const AdequateSet& sigma);

// Scans the closure conditions; returns a description of the first
// violation, or nothing if `members` is adequate.
std::optional<std::string> adequacy_violation(const FormulaSet& members);

} // namespace polyreach
