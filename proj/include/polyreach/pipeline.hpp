// Hat extension, filtration and cut composed, with a preservation report.
#pragma once

#include <string>
#include <vector>

#include "polyreach/filtration.hpp"

namespace polyreach {

struct PreservationFailure {
    Formula formula;
    WorldId world;
    bool source_value;
};

struct WitnessFailure {
    Formula formula;
    std::size_t class_index;
};

struct PipelineReport {
    std::size_t closure_size = 0;
    std::size_t hat_size = 0;
    std::size_t classes = 0;
    bool output_is_poset = true;
    // Preservation is only claimed for poset inputs.
    bool advisory = false;
    std::size_t checks = 0;
    std::vector<PreservationFailure> failures;
    std::size_t witnesses_checked = 0;
    std::vector<WitnessFailure> witness_failures;

    bool ok() const noexcept { return output_is_poset && failures.empty() && witness_failures.empty(); }
};

struct PipelineResult {
    ClassModel filtrated;
    PreorderModel output;
    PipelineReport report;
};

// cut(filtrate(M, hat(closure(Gamma)))). Checks every member of
// closure(Gamma) at every source world against its class in the output,
// and that every gamma-member true at a filtrated class has an up-down
// witness in the output built from equal or strict steps.
PipelineResult plr_pipeline(const PreorderModel& m, const FormulaSet& gamma);

} // namespace polyreach
