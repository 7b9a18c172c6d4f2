#include "polyreach/morphism.hpp"

#include <numeric>
#include <set>

#include "polyreach/evaluate.hpp"
#include "polyreach/parser.hpp"

namespace polyreach {

WorldMap identity_map(std::size_t n) {
    WorldMap f(n);
    std::iota(f.begin(), f.end(), WorldId{0});
    return f;
}

MorphismCheck is_updown_morphism(const WorldMap& f, const PreorderModel& m, const PreorderModel& target) {
    if (f.size() != m.size()) throw ModelError("map is not total on the source worlds");
    for (auto x : f)
        if (x >= target.size()) throw ModelError("map sends a world outside the target");

    std::set<std::string> atoms;
    for (const auto& a : m.atoms()) atoms.insert(a);
    for (const auto& a : target.atoms()) atoms.insert(a);
    for (const auto& p : atoms) {
        auto src = m.valuation(p);
        auto dst = target.valuation(p);
        for (WorldId w = 0; w < m.size(); ++w) {
            if (src.test(w) != dst.test(f[w]))
                return {false, "atom",
                        p + " is " + (src.test(w) ? "true" : "false") + " at " + m.name(w) + " but " +
                            (dst.test(f[w]) ? "true" : "false") + " at " + target.name(f[w])};
        }
    }
    // With u = v, forth reduces to monotonicity, which also implies it.
    for (WorldId w = 0; w < m.size(); ++w) {
        for (auto u : m.up(w).members()) {
            if (!target.leq(f[w], f[u]))
                return {false, "forth",
                        m.name(w) + " <= " + m.name(u) + " but " + target.name(f[w]) + " is not below " +
                            target.name(f[u])};
        }
    }
    std::vector<WorldSet> preimage(target.size(), m.none());
    for (WorldId w = 0; w < m.size(); ++w) preimage[f[w]].set(w);
    std::vector<std::optional<Relation>> reach(target.size());
    for (WorldId w = 0; w < m.size(); ++w) {
        for (auto u2 : target.up(f[w]).members()) {
            if (!reach[u2]) reach[u2] = reach_oracle(m, preimage[u2]);
            const auto& row = (*reach[u2])[w];
            for (auto v2 : target.down(u2).members()) {
                if (!row.intersects(preimage[v2]))
                    return {false, "back",
                            "no up-down path from " + m.name(w) + " through the preimage of " + target.name(u2) +
                                " to the preimage of " + target.name(v2)};
            }
        }
    }
    return {};
}

PullbackCheck pullback_check(const WorldMap& f, const PreorderModel& m, const PreorderModel& target,
                             const std::vector<Formula>& formulas) {
    auto mc = is_updown_morphism(f, m, target);
    if (!mc.ok) throw ModelError("not an up-down morphism (" + mc.clause + "): " + mc.witness);
    for (const auto& phi : formulas) {
        auto src = evaluate(m, phi);
        auto dst = evaluate(target, phi);
        for (WorldId w = 0; w < m.size(); ++w) {
            if (src.test(w) != dst.test(f[w]))
                return {false, phi,
                        to_string(phi) + " differs at " + m.name(w) + " and its image " + target.name(f[w])};
        }
    }
    return {};
}

} // namespace polyreach
