#include "doctest.h"
#include "polyreach/axioms.hpp"
#include "polyreach/complex.hpp"
#include "polyreach/evaluate.hpp"
#include "polyreach/morphism.hpp"
#include "polyreach/nerve.hpp"
#include "polyreach/parser.hpp"
#include "polyreach/pipeline.hpp"
#include "polyreach/random.hpp"

using namespace polyreach;

namespace {

Formula P(std::string_view s) { return parse_formula(s); }

PreorderModel three() {
    return parse_model("worlds a u v\norder a u\norder v u\nvaluation p u\nvaluation q v\n");
}

PreorderModel chain2() { return parse_model("worlds a b\norder a b\nvaluation p b\n"); }

std::vector<Formula> sample_formulas(Rng& rng, std::size_t n, std::size_t depth) {
    FormulaSampler fs;
    fs.max_depth = depth;
    std::vector<Formula> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_formula(rng, fs));
    return out;
}

} // namespace

TEST_CASE("nerve examples") {
    auto single = nerve(PreorderModel::build({"x"}, {}, {}));
    CHECK(single.model.size() == 1);

    auto n = nerve(PreorderModel::build({"x", "y"}, {{"x", "y"}}, {{"p", {"y"}}}));
    CHECK(n.model.size() == 3);
    auto x = *n.model.find("x"), y = *n.model.find("y"), xy = *n.model.find("x+y");
    CHECK(n.model.less(x, xy));
    CHECK(n.model.less(y, xy));
    CHECK_FALSE(n.model.leq(x, y));
    CHECK(n.model.format_set(n.model.valuation("p")) == "{y, x+y}");

    auto anti = nerve(PreorderModel::build({"a", "b", "c"}, {}, {}));
    CHECK(anti.model.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(anti.model.up(i).count() == 1);

    CHECK_THROWS_AS(nerve(PreorderModel::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {})), ModelError);
    // Serialization re-parses.
    auto again = parse_model(write_model(n.model));
    CHECK(again.up_sets() == n.model.up_sets());
}

TEST_CASE("nerve size of linear chains") {
    for (std::size_t k = 1; k <= 5; ++k) {
        std::vector<std::string> names;
        std::vector<PreorderModel::Edge> edges;
        for (std::size_t i = 0; i < k; ++i) {
            names.push_back("c" + std::to_string(i));
            if (i) edges.emplace_back(names[i - 1], names[i]);
        }
        CHECK(nerve(PreorderModel::build(names, edges, {})).model.size() == (std::size_t{1} << k) - 1);
    }
}

TEST_CASE("up-down morphisms") {
    auto m = three();
    CHECK(is_updown_morphism(identity_map(3), m, m).ok);
    CHECK(pullback_check(identity_map(3), m, m, {P("gamma(p,q)"), P("[]p")}).ok);

    auto n = nerve(m);
    auto f = n.max_map();
    CHECK(is_updown_morphism(f, n.model, m).ok);
    CHECK(pullback_check(f, n.model, m, {P("p"), P("gamma(p,q)"), P("<>q"), P("pi p")}).ok);

    WorldMap constant(3, *m.find("u"));
    auto bad = is_updown_morphism(constant, m, m);
    CHECK_FALSE(bad.ok);
    CHECK(bad.clause == "atom");
    CHECK_FALSE(bad.witness.empty());
    CHECK_THROWS_AS(pullback_check(constant, m, m, {P("p")}), ModelError);
    CHECK_THROWS_AS(is_updown_morphism({0, 1}, m, m), ModelError);
    CHECK_THROWS_AS(is_updown_morphism({0, 1, 7}, m, m), ModelError);

    // x and y incomparable, sent to the bottom and top of a chain: no path
    // from x runs through the preimage {y} of the top.
    auto anti = parse_model("worlds x y\n");
    auto up = parse_model("worlds z1 z2\norder z1 z2\n");
    auto split = is_updown_morphism({0, 1}, anti, up);
    CHECK_FALSE(split.ok);
    CHECK(split.clause == "back");

    auto chain = parse_model("worlds a b\norder a b\n");
    auto down = is_updown_morphism({1, 0}, chain, chain);
    CHECK_FALSE(down.ok);
    CHECK(down.clause == "forth");
}

TEST_CASE("max is an up-down morphism with the pullback property on random posets") {
    Rng rng(77);
    ModelSampler ms;
    ms.max_worlds = 5;
    for (int i = 0; i < 60; ++i) {
        auto m = random_model(rng, ms);
        auto n = nerve(m);
        CHECK(is_updown_morphism(n.max_map(), n.model, m).ok);
        CHECK(pullback_check(n.max_map(), n.model, m, sample_formulas(rng, 5, 3)).ok);
    }
}

TEST_CASE("filtration examples") {
    auto m = three();
    auto none = filtrate(m, adequate_closure({P("p")}));
    CHECK(none.theories.size() == 2);
    for (std::size_t c = 0; c < 2; ++c) CHECK(none.model.up(c).count() == 2);

    auto c = chain2();
    auto cm = filtrate(c, adequate_closure({P("[]p")}));
    REQUIRE(cm.theories.size() == 2);
    auto ca = cm.class_map[*c.find("a")], cb = cm.class_map[*c.find("b")];
    CHECK(cm.model.less(ca, cb));
    CHECK(cm.model.name(ca) == "a");

    // Classes merge worlds with equal theories.
    auto flat = parse_model("worlds a b c\nvaluation p a b\n");
    auto fm = filtrate(flat, adequate_closure({P("p")}));
    CHECK(fm.theories.size() == 2);
    CHECK(fm.model.name(fm.class_map[0]) == "a+b");
    CHECK(parse_model(write_model(fm.model)).size() == 2);
}

TEST_CASE("chi") {
    CHECK(chi({P("p"), P("~q")}) == P("p & ~q"));
    CHECK(is_top(chi({})));

    auto c = chain2();
    auto cm = filtrate(c, adequate_closure({P("[]p")}));
    auto ca = cm.class_map[0], cb = cm.class_map[1];
    auto d = chi_disjunction(cm, ca, P("p"));
    CHECK(d == big_or({chi(cm.theories[0]), chi(cm.theories[1])}));
    CHECK(is_bottom(chi_disjunction(cm, cb, P("~p & p"))));
    // Empty extension: both lemmas hold vacuously.
    auto r = chi_lemma_check(c, cm, ca, P("~[]p & []p"));
    CHECK(r.ok());
    CHECK(is_bottom(r.chi_formula));
}

TEST_CASE("chi lemmas on the 3-world poset") {
    auto m = three();
    auto sigma = adequate_closure({P("gamma(p,q)")});
    auto cm = filtrate(m, sigma);
    for (std::size_t u = 0; u < cm.theories.size(); ++u)
        for (const auto& phi : sigma.members) CHECK(chi_lemma_check(m, cm, u, phi).ok());
}

TEST_CASE("filtration truth on random models") {
    Rng rng(123);
    ModelSampler ms;
    for (int i = 0; i < 80; ++i) {
        ms.poset = i % 2 == 0;
        auto m = random_model(rng, ms);
        auto fs = sample_formulas(rng, 2, 2);
        auto sigma = adequate_closure({fs.begin(), fs.end()});
        auto cm = filtrate(m, sigma);
        CHECK(cm.theories.size() <= m.size());
        for (WorldId w = 0; w < m.size(); ++w)
            for (WorldId v = 0; v < m.size(); ++v)
                if (m.leq(w, v)) CHECK(cm.model.leq(cm.class_map[w], cm.class_map[v]));
        for (const auto& s : sigma.members) {
            auto src = evaluate(m, s), dst = evaluate(cm.model, s);
            for (WorldId w = 0; w < m.size(); ++w) CHECK(src.test(w) == dst.test(cm.class_map[w]));
        }
    }
}

TEST_CASE("cut") {
    auto c = chain2();
    CHECK(cut(c).up_sets() == c.up_sets());
    auto cl = parse_model("worlds a b\norder a b\norder b a\n");
    auto ca = cut(cl);
    CHECK(ca.is_poset());
    CHECK_FALSE(ca.leq(0, 1));
    CHECK_FALSE(ca.leq(1, 0));
    auto below = parse_model("worlds a b c\norder a b\norder b a\norder b c\nvaluation p a\n");
    auto cb = cut(below);
    CHECK(cb.is_poset());
    CHECK_FALSE(cb.leq(0, 1));
    CHECK(cb.less(0, 2));
    CHECK(cb.less(1, 2));
    CHECK(cb.valuations() == below.valuations());
}

TEST_CASE("cut validates Grz") {
    Rng rng(8);
    ModelSampler ms;
    ms.poset = false;
    ms.edge_density = 0.5;
    for (int i = 0; i < 30; ++i) {
        auto m = cut(random_model(rng, ms));
        AxiomSuiteConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(i);
        cfg.instances = 10;
        CHECK(axiom_suite(m, cfg).ok());
    }
}

TEST_CASE("pipeline examples") {
    auto c = chain2();
    auto rp = plr_pipeline(c, {P("p")});
    CHECK(rp.report.ok());
    CHECK(rp.report.classes == 2);

    auto rd = plr_pipeline(c, {P("<>p")});
    CHECK(rd.filtrated.sigma.contains(P("<>(~p & <>p)")));
    CHECK(rd.report.ok());

    auto rg = plr_pipeline(three(), {P("gamma(p,q)")});
    CHECK(rg.report.ok());
    CHECK(rg.report.witnesses_checked > 0);
    CHECK(rg.output.is_poset());
    CHECK_FALSE(rg.report.advisory);
    CHECK(plr_pipeline(parse_model("worlds a b\norder a b\norder b a\n"), {P("p")}).report.advisory);
}

TEST_CASE("pipeline keeps clusters of the filtration apart") {
    // Without a companion for []q, every class lands in one cluster and cut
    // makes []q true at w1.
    auto m1 = parse_model("worlds w0 w1 w2 w3 w4 w5\norder w0 w3\norder w1 w0\norder w1 w4\n"
                          "order w2 w1\norder w3 w5\nvaluation p w0 w2\nvaluation q w1\n");
    auto r1 = plr_pipeline(m1, {P("[]q"), P("gamma([]q, q)")});
    CHECK(r1.report.ok());
    CHECK(r1.report.classes > 1);

    // Without <>(p & q), w0 and w2 share a cluster and cut separates the only
    // gamma witness.
    auto m2 = parse_model("worlds w0 w1 w2 w3\norder w2 w0\nvaluation p w0 w1 w2 w3\nvaluation q w2\n");
    auto r2 = plr_pipeline(m2, {P("q"), P("gamma(gamma(p,q), T)")});
    CHECK(r2.report.ok());
    CHECK(r2.output.leq(r2.filtrated.class_map[2], r2.filtrated.class_map[0]));
}

TEST_CASE("pipeline preserves closure members on random posets") {
    Rng rng(99);
    ModelSampler ms;
    for (int i = 0; i < 60; ++i) {
        auto m = random_model(rng, ms);
        auto fs = sample_formulas(rng, 2, 2);
        auto r = plr_pipeline(m, {fs.begin(), fs.end()});
        CHECK(r.output.is_poset());
        CHECK(r.report.failures.empty());
        CHECK(r.report.witness_failures.empty());
    }
}

TEST_CASE("satisfiability transfers to the nerve and the realization") {
    Rng rng(31);
    ModelSampler ms;
    ms.max_worlds = 4;
    for (int i = 0; i < 30; ++i) {
        auto m = random_model(rng, ms);
        auto f = sample_formulas(rng, 1, 3)[0];
        auto truth = evaluate(m, f);
        auto n = nerve(m);
        auto x = realize(m);
        auto cells = evaluate_cells(x, f);
        for (WorldId w = 0; w < m.size(); ++w) {
            auto single = *n.model.find(m.name(w));
            CHECK(evaluate(n.model, f).test(single) == truth.test(w));
            auto s = *x.complex.find({w});
            CHECK(cells.test(cell_of(x.complex, x.complex.barycenter(s)).simplex) == truth.test(w));
        }
    }
}
