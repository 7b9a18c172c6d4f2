// Seeded samplers for models and formulas. Every randomized suite draws
// from a caller-owned engine so runs are reproducible from the seed.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polyreach/formula.hpp"
#include "polyreach/model.hpp"

namespace polyreach {

using Rng = std::mt19937_64;

struct ModelSampler {
    std::size_t min_worlds = 1;
    std::size_t max_worlds = 5;
    double edge_density = 0.35;
    // Posets are drawn as DAGs over a random linear order; preorders may
    // contain cycles (clusters).
    bool poset = true;
    std::vector<std::string> atoms{"p", "q"};
    double valuation_density = 0.4;
};

PreorderModel random_model(Rng& rng, const ModelSampler& sampler);

struct FormulaSampler {
    // Constructor nesting depth; sugar (<>, |, ->) counts as one level.
    std::size_t max_depth = 3;
    std::vector<std::string> atoms{"p", "q"};
    bool allow_constants = true;
};

Formula random_formula(Rng& rng, const FormulaSampler& sampler);

} // namespace polyreach
