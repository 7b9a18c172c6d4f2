// Formulas of the reachability language: atoms, negation, conjunction,
// box and the binary reachability modality gamma.
//
// Formula is an immutable value with structural equality and a total
// structural order; derived connectives are expanded into the five core
// constructors on construction.
#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace polyreach {

enum class Kind : unsigned char { Atom, Not, And, Box, Reach };

class Formula {
public:
    // Atom reserved for the encoding of T/F; never accepted from user input.
    static constexpr std::string_view kTruthAtom = "__t";

    static Formula atom(std::string name);
    static Formula negation(Formula child);
    static Formula conjunction(Formula left, Formula right);
    static Formula box(Formula child);
    static Formula reach(Formula path, Formula target);

    Kind kind() const noexcept;
    // Valid only for atoms.
    const std::string& name() const;
    // Valid for Not and Box.
    const Formula& child() const;
    // Valid for And and Reach (for Reach: left = path formula, right = target).
    const Formula& left() const;
    const Formula& right() const;

    std::size_t size() const noexcept;
    // Modal nesting depth: Box and Reach add one level, Boolean connectives none.
    std::size_t depth() const noexcept;
    std::size_t hash() const noexcept;

    bool is_atom() const noexcept { return kind() == Kind::Atom; }
    bool is_negation() const noexcept { return kind() == Kind::Not; }

    friend bool operator==(const Formula& a, const Formula& b) noexcept;
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

// Derived connectives, all expressed in the core.
Formula top();
Formula bottom();
Formula diamond(Formula f);
Formula disjunction(Formula a, Formula b);
Formula implication(Formula a, Formula b);
Formula equivalence(Formula a, Formula b);
// [pi]f := ~gamma(T, ~f): f holds throughout the zigzag-connected component.
Formula global_box(Formula f);

// Conjunction/disjunction over a list; empty lists give T and F respectively.
Formula big_and(const std::vector<Formula>& fs);
Formula big_or(const std::vector<Formula>& fs);

bool is_top(const Formula& f) noexcept;
bool is_bottom(const Formula& f) noexcept;

// If f = ~g returns g, otherwise ~f.
Formula single_negation(const Formula& f);

// Matches the core shape ~[]~g of <>g and returns g.
std::optional<Formula> diamond_body(const Formula& f);

// Atom names occurring in f, excluding the reserved truth atom.
std::set<std::string> atoms_of(const Formula& f);

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

} // namespace polyreach
