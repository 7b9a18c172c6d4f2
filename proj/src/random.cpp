#include "polyreach/random.hpp"

#include <algorithm>
#include <numeric>

namespace polyreach {

PreorderModel random_model(Rng& rng, const ModelSampler& s) {
    std::uniform_int_distribution<std::size_t> size_dist(s.min_worlds, std::max(s.min_worlds, s.max_worlds));
    std::bernoulli_distribution edge(s.edge_density);
    std::bernoulli_distribution mark(s.valuation_density);
    const auto n = size_dist(rng);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<WorldSet> rel(n, WorldSet(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (s.poset && i > j) continue;
            if (edge(rng)) rel[perm[i]].set(perm[j]);
        }
    }
    std::map<std::string, WorldSet> val;
    for (const auto& a : s.atoms) {
        WorldSet set(n);
        for (std::size_t w = 0; w < n; ++w)
            if (mark(rng)) set.set(w);
        val.emplace(a, std::move(set));
    }
    return PreorderModel::from_relation(std::move(names), std::move(rel), std::move(val));
}

namespace {

Formula sample(Rng& rng, const FormulaSampler& s, std::size_t depth) {
    std::uniform_int_distribution<std::size_t> pick_atom(0, s.atoms.size() - 1);
    auto leaf = [&]() -> Formula {
        if (s.allow_constants) {
            std::uniform_int_distribution<int> c(0, 9);
            int r = c(rng);
            if (r == 0) return top();
            if (r == 1) return bottom();
        }
        return Formula::atom(s.atoms[pick_atom(rng)]);
    };
    if (depth == 0) return leaf();
    std::uniform_int_distribution<int> op(0, 9);
    switch (op(rng)) {
    case 0:
        return leaf();
    case 1:
        return Formula::negation(sample(rng, s, depth - 1));
    case 2:
        return Formula::conjunction(sample(rng, s, depth - 1), sample(rng, s, depth - 1));
    case 3:
        return disjunction(sample(rng, s, depth - 1), sample(rng, s, depth - 1));
    case 4:
        return Formula::box(sample(rng, s, depth - 1));
    case 5:
        return diamond(sample(rng, s, depth - 1));
    case 6:
        return implication(sample(rng, s, depth - 1), sample(rng, s, depth - 1));
    default:
        return Formula::reach(sample(rng, s, depth - 1), sample(rng, s, depth - 1));
    }
}

} // namespace

Formula random_formula(Rng& rng, const FormulaSampler& sampler) {
    std::uniform_int_distribution<std::size_t> d(0, sampler.max_depth);
    return sample(rng, sampler, d(rng));
}

} // namespace polyreach
