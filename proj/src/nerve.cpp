#include "polyreach/nerve.hpp"

#include <algorithm>

#include "polyreach/chains.hpp"
#include "polyreach/filtration.hpp"

namespace polyreach {

std::vector<WorldId> NerveModel::max_map() const {
    std::vector<WorldId> out;
    out.reserve(chains.size());
    for (const auto& c : chains) out.push_back(c.back());
    return out;
}

NerveModel nerve(const PreorderModel& poset) {
    NerveModel n;
    n.chains = enumerate_chains(poset);
    const auto size = n.chains.size();
    std::vector<std::vector<WorldId>> sorted = n.chains;
    for (auto& c : sorted) std::sort(c.begin(), c.end());
    std::vector<WorldSet> rel(size, WorldSet(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (std::includes(sorted[j].begin(), sorted[j].end(), sorted[i].begin(), sorted[i].end())) rel[i].set(j);
    std::map<std::string, WorldSet> val;
    for (const auto& [atom, ws] : poset.valuations()) {
        WorldSet s(size);
        for (std::size_t i = 0; i < size; ++i)
            if (ws.test(n.chains[i].back())) s.set(i);
        val.emplace(atom, std::move(s));
    }
    n.model = PreorderModel::from_relation(group_labels(poset, n.chains, "n"), std::move(rel), std::move(val));
    return n;
}

} // namespace polyreach
