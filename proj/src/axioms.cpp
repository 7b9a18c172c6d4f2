#include "polyreach/axioms.hpp"

#include "polyreach/evaluate.hpp"
#include "polyreach/random.hpp"

namespace polyreach {

bool AxiomReport::ok() const noexcept {
    for (const auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

bool AxiomReport::alr_ok() const noexcept {
    for (const auto& c : checks)
        if (c.name != "grz" && !c.ok()) return false;
    return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Formula axiom1(const Formula& phi, const Formula& psi) {
    auto g = Formula::reach(phi, psi);
    return implication(disjunction(psi, Formula::conjunction(phi, g)), Formula::box(implication(phi, g)));
}

Formula axiom2(const Formula& phi, const Formula& psi) {
    auto g = Formula::reach(phi, psi);
    return implication(diamond(Formula::conjunction(phi, g)), g);
}

Formula reach_implies_diamond(const Formula& phi, const Formula& psi) {
    return implication(Formula::reach(phi, psi), diamond(phi));
}

Formula grz(const Formula& p) {
    auto inner = Formula::box(implication(Formula::box(implication(p, Formula::box(p))), p));
    return implication(inner, Formula::box(p));
}

namespace {

void check_valid(const PreorderModel& m, const Formula& instance, AxiomCheck& check) {
    ++check.tested;
    auto ext = evaluate(m, instance);
    if (ext.count() != m.size())
        check.violations.push_back({instance, ext.complement().first()});
}

// Rule: if every premise is valid in m, the conclusion must be too.
void check_rule(const PreorderModel& m, const std::vector<Formula>& premises, const Formula& conclusion,
                AxiomCheck& check) {
    ++check.tested;
    for (const auto& p : premises)
        if (!is_valid(m, p)) return;
    ++check.premises_valid;
    auto ext = evaluate(m, conclusion);
    if (ext.count() != m.size())
        check.violations.push_back({conclusion, ext.complement().first()});
}

} // namespace

AxiomReport axiom_suite(const PreorderModel& m, const AxiomSuiteConfig& config) {
    std::vector<std::string> atoms = m.atoms();
    if (atoms.empty()) atoms.push_back("p");

    std::vector<Formula> base;
    for (const auto& a : atoms) {
        base.push_back(Formula::atom(a));
        base.push_back(Formula::negation(Formula::atom(a)));
    }
    base.push_back(top());
    base.push_back(bottom());

    Rng rng(config.seed);
    FormulaSampler sampler;
    sampler.atoms = atoms;
    sampler.max_depth = config.max_depth;
    auto draw = [&] { return random_formula(rng, sampler); };

    auto named = [](const char* name) {
        AxiomCheck c;
        c.name = name;
        return c;
    };
    auto a1 = named("axiom1"), a2 = named("axiom2"), gd = named("gamma-diamond");
    auto r1 = named("rule1"), r2 = named("rule2"), gz = named("grz");

    auto pair_checks = [&](const Formula& phi, const Formula& psi) {
        check_valid(m, axiom1(phi, psi), a1);
        check_valid(m, axiom2(phi, psi), a2);
        check_valid(m, reach_implies_diamond(phi, psi), gd);
    };
    for (const auto& phi : base) {
        for (const auto& psi : base) pair_checks(phi, psi);
        if (config.check_grz) check_valid(m, grz(phi), gz);
    }
    for (std::size_t i = 0; i < config.instances; ++i) {
        auto phi = draw();
        auto psi = draw();
        pair_checks(phi, psi);
        if (config.check_grz) check_valid(m, grz(phi), gz);

        // Rule 1, once with premises valid by construction and once random.
        auto phi2 = disjunction(phi, draw());
        auto psi2 = disjunction(psi, draw());
        check_rule(m, {implication(phi, phi2), implication(psi, psi2)},
                   implication(Formula::reach(phi, psi), Formula::reach(phi2, psi2)), r1);
        auto phi3 = draw();
        auto psi3 = draw();
        check_rule(m, {implication(phi, phi3), implication(psi, psi3)},
                   implication(Formula::reach(phi, psi), Formula::reach(phi3, psi3)), r1);

        // Rule 2. chi = phi & gamma(phi, psi) always satisfies both premises.
        auto rule2 = [&](const Formula& f, const Formula& g) {
            std::vector<Formula> premises{
                implication(g, Formula::box(implication(f, g))),
                implication(Formula::conjunction(f, diamond(Formula::conjunction(f, g))), g)};
            check_rule(m, premises,
                       implication(Formula::reach(f, g), diamond(Formula::conjunction(f, g))), r2);
        };
        rule2(phi, Formula::conjunction(phi, Formula::reach(phi, psi)));
        rule2(phi, psi);
    }
    AxiomReport report;
    report.checks = {a1, a2, gd, r1, r2};
    if (config.check_grz) report.checks.push_back(gz);
    return report;
}

} // namespace polyreach
