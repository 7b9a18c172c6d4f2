#include "polyreach/filtration.hpp"

#include <algorithm>
#include <set>

#include "polyreach/evaluate.hpp"

namespace polyreach {

std::vector<std::string> group_labels(const PreorderModel& m, const std::vector<std::vector<WorldId>>& groups,
                                      const std::string& fallback_prefix) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    bool clash = false;
    for (const auto& g : groups) {
        std::vector<std::string> names;
        for (auto w : g) names.push_back(m.name(w));
        std::sort(names.begin(), names.end());
        std::string label;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) label += '+';
            label += names[i];
        }
        if (!seen.insert(label).second) clash = true;
        out.push_back(std::move(label));
    }
    if (clash)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = fallback_prefix + std::to_string(i);
    return out;
}

ClassModel filtrate(const PreorderModel& m, const AdequateSet& sigma) {
    const std::vector<Formula> members(sigma.members.begin(), sigma.members.end());
    std::vector<WorldSet> truth;
    truth.reserve(members.size());
    for (const auto& f : members) truth.push_back(evaluate(m, f));

    ClassModel cm;
    cm.sigma = sigma;
    std::map<std::vector<bool>, std::size_t> index;
    std::vector<std::vector<bool>> profiles;
    for (WorldId w = 0; w < m.size(); ++w) {
        std::vector<bool> profile(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) profile[i] = truth[i].test(w);
        auto [it, fresh] = index.emplace(profile, profiles.size());
        if (fresh) {
            profiles.push_back(profile);
            cm.members.emplace_back();
        }
        cm.class_map.push_back(it->second);
        cm.members[it->second].push_back(w);
    }
    const auto n = profiles.size();
    for (const auto& p : profiles) {
        FormulaSet theory;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (p[i]) theory.insert(members[i]);
        cm.theories.push_back(std::move(theory));
    }
    std::vector<std::size_t> boxes;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].kind() == Kind::Box) boxes.push_back(i);
    std::vector<WorldSet> rel(n, WorldSet(n));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (auto b : boxes)
                if (profiles[t][b] && !profiles[s][b]) ok = false;
            if (ok) rel[t].set(s);
        }
    std::map<std::string, WorldSet> val;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!members[i].is_atom() || members[i].name() == Formula::kTruthAtom) continue;
        WorldSet s(n);
        for (std::size_t c = 0; c < n; ++c)
            if (profiles[c][i]) s.set(c);
        val.emplace(members[i].name(), std::move(s));
    }
    cm.model = PreorderModel::from_relation(group_labels(m, cm.members, "c"), std::move(rel), std::move(val));
    return cm;
}

Formula chi(const FormulaSet& theory) { return big_and({theory.begin(), theory.end()}); }

Formula chi_disjunction(const ClassModel& cm, std::size_t u, const Formula& phi) {
    const auto n = cm.theories.size();
    WorldSet a(n);
    for (std::size_t c = 0; c < n; ++c)
        if (cm.theories[c].count(phi)) a.set(c);
    auto rel = reach_oracle(cm.model, a);
    std::vector<Formula> parts;
    rel.at(u).for_each([&](std::size_t s) { parts.push_back(chi(cm.theories[s])); });
    return big_or(parts);
}

ChiLemmaCheck chi_lemma_check(const PreorderModel& m, const ClassModel& cm, std::size_t u, const Formula& phi) {
    auto x = chi_disjunction(cm, u, phi);
    ChiLemmaCheck r{true, true, x};
    r.diamond_ok = is_valid(m, implication(diamond(Formula::conjunction(phi, x)), x));
    r.box_ok = is_valid(m, implication(Formula::conjunction(phi, x), Formula::box(implication(phi, x))));
    return r;
}

PreorderModel cut(const PreorderModel& m) {
    const auto n = m.size();
    std::vector<WorldSet> rel(n, WorldSet(n));
    for (WorldId w = 0; w < n; ++w) {
        rel[w].set(w);
        for (auto v : m.up(w).members())
            if (m.less(w, v)) rel[w].set(v);
    }
    return PreorderModel::from_relation(m.names(), std::move(rel), m.valuations());
}

} // namespace polyreach
