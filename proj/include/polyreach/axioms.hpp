// Semantic soundness checks: substitution instances of the reachability
// axioms, validity preservation of the two rules, and the Grz axiom.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyreach/formula.hpp"
#include "polyreach/model.hpp"

namespace polyreach {

struct AxiomSuiteConfig {
    std::uint64_t seed = 0;
    // Random instances per check, on top of the exhaustive atomic ones.
    std::size_t instances = 40;
    std::size_t max_depth = 2;
    bool check_grz = true;
};

struct AxiomViolation {
    Formula instance;
    WorldId world;
};

struct AxiomCheck {
    std::string name;
    std::size_t tested = 0;
    // For rules: instances whose premises were all valid in the model.
    std::size_t premises_valid = 0;
    std::vector<AxiomViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool ok() const noexcept;
    // Everything except Grz.
    bool alr_ok() const noexcept;
    const AxiomCheck* find(const std::string& name) const;
};

// Instance builders, exposed for tests and the CLI.
Formula axiom1(const Formula& phi, const Formula& psi);
Formula axiom2(const Formula& phi, const Formula& psi);
Formula reach_implies_diamond(const Formula& phi, const Formula& psi);
Formula grz(const Formula& phi);

AxiomReport axiom_suite(const PreorderModel& m, const AxiomSuiteConfig& config);

} // namespace polyreach
