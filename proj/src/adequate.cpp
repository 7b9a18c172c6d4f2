#include "polyreach/adequate.hpp"

#include <vector>

#include "polyreach/parser.hpp"

namespace polyreach {

namespace {

void add_subformulas(const Formula& f, FormulaSet& out) {
    if (!out.insert(f).second) return;
    switch (f.kind()) {
    case Kind::Atom:
        return;
    case Kind::Not:
    case Kind::Box:
        add_subformulas(f.child(), out);
        return;
    case Kind::And:
    case Kind::Reach:
        add_subformulas(f.left(), out);
        add_subformulas(f.right(), out);
        return;
    }
}

Formula box_companion(const Formula& reach) {
    return Formula::box(implication(reach.left(), reach));
}

Formula diamond_companion(const Formula& reach) {
    return diamond(Formula::conjunction(reach.left(), reach));
}

} // namespace

FormulaSet subformulas(const FormulaSet& gamma) {
    FormulaSet out;
    for (const auto& f : gamma) add_subformulas(f, out);
    return out;
}

FormulaSet subformulas(const Formula& f) {
    FormulaSet out;
    add_subformulas(f, out);
    return out;
}

AdequateSet adequate_closure(const FormulaSet& gamma) {
    FormulaSet gamma1 = gamma;
    for (const auto& f : subformulas(gamma)) {
        if (f.kind() != Kind::Reach) continue;
        gamma1.insert(box_companion(f));
        gamma1.insert(diamond_companion(f));
    }
    FormulaSet sub = subformulas(gamma1);
    FormulaSet members = sub;
    for (const auto& f : sub) {
        if (!f.is_negation()) members.insert(Formula::negation(f));
    }
    return AdequateSet{std::move(members), gamma};
}

AdequateSet hat_extension(const AdequateSet& sigma) {
    FormulaSet sigma1 = sigma.members;
    for (const auto& f : sigma.members) {
        // Any ~[]g counts as <>~g, so box members of every shape get the
        // Grz companion.
        std::optional<Formula> body = diamond_body(f);
        if (!body && f.is_negation() && f.child().kind() == Kind::Box)
            body = Formula::negation(f.child().child());
        if (body) {
            sigma1.insert(diamond(Formula::conjunction(Formula::negation(*body), diamond(*body))));
        } else if (f.kind() == Kind::Reach) {
            sigma1.insert(
                diamond(Formula::conjunction(f.left(), Formula::negation(f.right()))));
            // The Grz companion of <>(f & g) keeps cut from splitting a
            // gamma witness inside a cluster of a finite filtration.
            auto both = Formula::conjunction(f.left(), f.right());
            sigma1.insert(diamond(both));
            sigma1.insert(diamond(Formula::conjunction(Formula::negation(both), diamond(both))));
        }
    }
    return adequate_closure(sigma1);
}

std::optional<std::string> adequacy_violation(const FormulaSet& members) {
    auto need = [&](const Formula& f, const Formula& by, const char* why) -> std::optional<std::string> {
        if (members.count(f)) return std::nullopt;
        return std::string(why) + ": " + to_string(f) + " missing for " + to_string(by);
    };
    for (const auto& f : members) {
        std::optional<std::string> v;
        switch (f.kind()) {
        case Kind::Atom:
            break;
        case Kind::Not:
        case Kind::Box:
            v = need(f.child(), f, "subformula");
            break;
        case Kind::And:
            if (!(v = need(f.left(), f, "subformula"))) v = need(f.right(), f, "subformula");
            break;
        case Kind::Reach:
            if (!(v = need(f.left(), f, "subformula")) && !(v = need(f.right(), f, "subformula")) &&
                !(v = need(box_companion(f), f, "reach companion")))
                v = need(diamond_companion(f), f, "reach companion");
            break;
        }
        if (!v) v = need(single_negation(f), f, "single negation");
        if (v) return v;
    }
    return std::nullopt;
}

} // namespace polyreach
