#include <random>

#include "doctest.h"
#include "polyreach/adequate.hpp"
#include "polyreach/parser.hpp"
#include "polyreach/random.hpp"

using namespace polyreach;

namespace {
Formula P(std::string_view s) { return parse_formula(s); }
Formula a(const char* n) { return Formula::atom(n); }
} // namespace

TEST_CASE("parse core and sugar") {
    CHECK(P("<>p") == Formula::negation(Formula::box(Formula::negation(a("p")))));
    CHECK(P("gamma(p, T)") == Formula::reach(a("p"), top()));
    CHECK(P("p | q") == Formula::negation(Formula::conjunction(Formula::negation(a("p")), Formula::negation(a("q")))));
    CHECK(P("p -> q") == Formula::negation(Formula::conjunction(a("p"), Formula::negation(a("q")))));
    CHECK(P("p <-> q") == Formula::conjunction(P("p -> q"), P("q -> p")));
    CHECK(P("pi p") == Formula::negation(Formula::reach(top(), Formula::negation(a("p")))));
    CHECK(P("F") == single_negation(top()));
    CHECK(is_bottom(P("F")));
    CHECK(is_top(P("T")));
}

TEST_CASE("maze formula desugars disjunction inside gamma") {
    auto f = P("red & gamma(red | corridor | white, green)");
    REQUIRE(f.kind() == Kind::And);
    CHECK(f.left() == a("red"));
    REQUIRE(f.right().kind() == Kind::Reach);
    CHECK(f.right().left() == disjunction(disjunction(a("red"), a("corridor")), a("white")));
    CHECK(f.right().right() == a("green"));
}

TEST_CASE("precedence and associativity") {
    CHECK(P("~p & q") == Formula::conjunction(Formula::negation(a("p")), a("q")));
    CHECK(P("p & q | r") == disjunction(Formula::conjunction(a("p"), a("q")), a("r")));
    CHECK(P("p -> q -> r") == implication(a("p"), implication(a("q"), a("r"))));
    CHECK(P("p -> q <-> r") == equivalence(implication(a("p"), a("q")), a("r")));
    CHECK(P("[]p & q") == Formula::conjunction(Formula::box(a("p")), a("q")));
    CHECK(P("  ( p )  ") == a("p"));
    CHECK(P("gammas") == a("gammas"));
}

TEST_CASE("parse errors carry positions") {
    auto err = [](std::string_view s) -> ParseError {
        try {
            parse_formula(s);
        } catch (const ParseError& e) {
            return e;
        }
        FAIL("expected a parse error for ", s);
        return ParseError("", 0);
    };
    CHECK(err("(p & q").message().find("unbalanced") != std::string::npos);
    CHECK(err("p & q)").position() == 5);
    CHECK(err("p & __t").message().find("reserved") != std::string::npos);
    CHECK(err("p &").position() == 3);
    CHECK(err("p $ q").position() == 2);
    CHECK(err("").position() == 0);
    CHECK_THROWS_AS(parse_formula("gamma(p q)"), ParseError);
    CHECK_THROWS_AS(parse_formula("p q"), ParseError);
}

TEST_CASE("canonical printing") {
    CHECK(to_string(a("p")) == "p");
    CHECK(to_string(P("<>p")) == "~[]~p");
    CHECK(to_string(P("gamma(p,q)")) == "gamma(p, q)");
    CHECK(to_string(top()) == "T");
    CHECK(to_string(bottom()) == "F");
}

TEST_CASE("print/parse round trip on random formulas") {
    Rng rng(7);
    FormulaSampler s;
    s.max_depth = 5;
    s.atoms = {"p", "q", "r_1"};
    for (int i = 0; i < 2000; ++i) {
        auto f = random_formula(rng, s);
        CHECK(parse_formula(to_string(f)) == f);
    }
}

TEST_CASE("structural order and hashing") {
    CHECK(P("p & q") != P("q & p"));
    CHECK(P("~~p") != a("p"));
    CHECK(P("p & q").hash() == P("p&q").hash());
    FormulaSet s{P("p"), P("p"), P("q")};
    CHECK(s.size() == 2);
    CHECK(atoms_of(P("gamma(p, T) & q")) == std::set<std::string>{"p", "q"});
}

TEST_CASE("single negation") {
    CHECK(single_negation(a("p")) == P("~p"));
    CHECK(single_negation(P("~p")) == a("p"));
    CHECK(single_negation(P("[]p")) == P("~[]p"));
    CHECK(diamond_body(P("<>(p & q)")) == P("p & q"));
    CHECK_FALSE(diamond_body(P("~[]p")).has_value());
}

TEST_CASE("subformulas") {
    CHECK(subformulas(P("[]p")) == FormulaSet{P("[]p"), P("p")});
    CHECK(subformulas(P("gamma(p,q)")) == FormulaSet{P("gamma(p,q)"), P("p"), P("q")});
    CHECK(subformulas(P("~(p&q)")) == FormulaSet{P("~(p&q)"), P("p&q"), P("p"), P("q")});
}

TEST_CASE("adequate closure examples") {
    CHECK(adequate_closure({P("p")}).members == FormulaSet{P("p"), P("~p")});

    auto s = adequate_closure({P("[]p"), P("~[]p")});
    CHECK(s.members == FormulaSet{P("[]p"), P("~[]p"), P("p"), P("~p")});

    auto g = P("gamma(p,q)");
    auto c = adequate_closure({g});
    CHECK(c.contains(Formula::box(implication(P("p"), g))));
    CHECK(c.contains(diamond(Formula::conjunction(P("p"), g))));
    // Hand count: 11 subformulas of the companion-extended set plus ~p, ~q
    // and the negated box companion.
    CHECK(c.size() == 14);
    CHECK_FALSE(adequacy_violation(c.members).has_value());
    CHECK(c.origin == FormulaSet{g});
}

TEST_CASE("hat extension examples") {
    auto sp = adequate_closure({P("p")});
    CHECK(hat_extension(sp).members == sp.members);

    auto sd = hat_extension(adequate_closure({P("<>p")}));
    CHECK(sd.contains(P("<>(~p & <>p)")));
    CHECK_FALSE(adequacy_violation(sd.members).has_value());

    auto sg = hat_extension(adequate_closure({P("gamma(p,q)")}));
    CHECK(sg.contains(P("<>(p & ~q)")));
    CHECK(sg.contains(P("<>(p & q)")));
    CHECK(sg.contains(P("<>(~(p & q) & <>(p & q))")));
    CHECK_FALSE(adequacy_violation(sg.members).has_value());

    // []q has no <>-shape of its own; ~[]q stands for <>~q.
    auto sb = hat_extension(adequate_closure({P("[]q")}));
    CHECK(sb.contains(P("<>(~~q & <>~q)")));
}

TEST_CASE("adequacy violations are detected") {
    CHECK(adequacy_violation({P("[]p")}).has_value());
    CHECK(adequacy_violation({P("p")}).has_value());
    CHECK(adequacy_violation({P("gamma(p,q)"), P("~gamma(p,q)"), P("p"), P("~p"), P("q"), P("~q")}).has_value());
}

TEST_CASE("closure properties on random sets") {
    Rng rng(11);
    FormulaSampler s;
    s.max_depth = 3;
    for (int i = 0; i < 200; ++i) {
        FormulaSet g{random_formula(rng, s)};
        auto c = adequate_closure(g);
        CHECK_FALSE(adequacy_violation(c.members).has_value());
        for (const auto& f : g) CHECK(c.contains(f));
        // Idempotent.
        CHECK(adequate_closure(c.members).members == c.members);
        // Monotone.
        auto g2 = g;
        g2.insert(random_formula(rng, s));
        auto c2 = adequate_closure(g2);
        for (const auto& f : c.members) CHECK(c2.contains(f));
        // Hat extension is a superset and adequate.
        auto h = hat_extension(c);
        for (const auto& f : c.members) CHECK(h.contains(f));
        CHECK_FALSE(adequacy_violation(h.members).has_value());
    }
}
