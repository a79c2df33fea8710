#include <doctest.h>

#include <random>

#include "ptk/riley.hpp"
#include "test_support.hpp"

using namespace ptk;

namespace {

const VariableSet kStd = standard_variables();

MultiPolynomial P(const std::string& text, const VariableSet& vars = kStd) { return parse_polynomial(text, vars); }

GroupWord random_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 6), gen(0, 2), ex(-2, 2);
    std::vector<Letter> letters;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        int e = ex(rng);
        if (e == 0) e = 1;
        letters.push_back({"fgh"[gen(rng)], e});
    }
    return GroupWord(letters);
}

MultiPolynomial random_multi(std::mt19937_64& rng, const VariableSet& vars) {
    std::uniform_int_distribution<int> nterms(0, 4), e(0, 3), c(-5, 5);
    MultiPolynomial out(vars);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) out += MultiPolynomial::monomial(vars, Rational(c(rng)), {e(rng), e(rng), e(rng)});
    return out;
}

ZPoly golden_poly(const std::string& name) { return parse_canonical(support::read_golden("riley/" + name + ".poly")); }

}  // namespace

TEST_SUITE("multivariate polynomials") {
    TEST_CASE("parsing and printing") {
        CHECK(P("(u - v)*(u + v)") == P("u^2 - v^2"));
        CHECK(P("u(1-u^2)") == P("u - u^3"));
        CHECK(P("uv") == P("u*v"));
        CHECK(P("w^2 + 3*u*v - 1/2").to_string() == "3*u*v + w^2 - 1/2");
        CHECK(P("-u^3 + v").to_string() == "-u^3 + v");
        CHECK(P("0").to_string() == "0");
        CHECK_THROWS_AS(P("u + x"), std::invalid_argument);
        CHECK_THROWS_AS(P("u + (v"), std::invalid_argument);
        CHECK_THROWS_AS(P("u/v"), std::invalid_argument);
        CHECK_THROWS_AS(P("1/0"), std::invalid_argument);
        const auto e = parse_expression("(u-1)/(1+u-u^2)", kStd);
        CHECK(e.num == P("u - 1"));
        CHECK(e.den == P("1 + u - u^2"));
    }

    TEST_CASE("grlex order with u > v > w") {
        const auto f = P("w^3 + u*v*w + u^2 + v");
        std::vector<Exponents> order;
        for (const auto& [e, c] : f.terms()) order.push_back(e);
        CHECK(order == std::vector<Exponents>{{1, 1, 1}, {0, 0, 3}, {2, 0, 0}, {0, 1, 0}});
    }

    TEST_CASE("Laurent variables") {
        const VariableSet lv({"u", "v", "w"}, {"v"});
        const auto inv = MultiPolynomial::variable(lv, "v", -1);
        CHECK(inv * MultiPolynomial::variable(lv, "v") == MultiPolynomial::constant(lv, Rational(1)));
        CHECK_THROWS_AS(MultiPolynomial::variable(kStd, "v", -1), std::domain_error);
        CHECK(P("v^(-2)", lv) == inv * inv);
        const auto f = P("u*v^2 + v", lv) * inv * inv * inv;
        CHECK(f.min_degree(1) == -2);
        CHECK(f.normalized() == P("u*v + 1", lv));
    }

    TEST_CASE("JSON round trip") {
        const VariableSet lv({"u", "v", "w"}, {"v"});
        const auto f = P("3/2*u^2*w - v + 7", lv) * MultiPolynomial::variable(lv, "v", -3);
        CHECK(multipoly_from_json(to_json(f)) == f);
        auto bad = to_json(f);
        bad["terms"][0]["coeff"] = "0";
        CHECK_THROWS_AS(multipoly_from_json(bad), std::invalid_argument);
    }

    TEST_CASE("ring laws and substitution homomorphism") {
        std::mt19937_64 rng(5);
        const auto value = P("u*w - v + 2");
        for (int i = 0; i < 200; ++i) {
            const auto a = random_multi(rng, kStd), b = random_multi(rng, kStd), c = random_multi(rng, kStd);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            CHECK((a * b).substitute("v", value) == a.substitute("v", value) * b.substitute("v", value));
            CHECK(pow(a, 3) == a * a * a);
        }
    }
}

TEST_SUITE("presentations") {
    TEST_CASE("parser examples") {
        const auto p = parse_presentation("hfhg=fhgf");
        REQUIRE(p.relations.size() == 1);
        CHECK(p.relations[0].lhs.to_string() == "hfhg");
        CHECK(p.relations[0].rhs.to_string() == "fhgf");

        const auto q = parse_presentation("gf(hg)^3=f(hg)^3h");
        CHECK(q.relations[0].lhs == parse_word("gfhghghg"));
        CHECK(q.relations[0].rhs == parse_word("fhghghgh"));

        const auto r = parse_presentation("hfhfG=fhfGf");
        CHECK(r.relations[0].lhs.letters() ==
              std::vector<Letter>{{'h', 1}, {'f', 1}, {'h', 1}, {'f', 1}, {'g', -1}});
        CHECK(r.relations[0].rhs.letters() ==
              std::vector<Letter>{{'f', 1}, {'h', 1}, {'f', 1}, {'g', -1}, {'f', 1}});

        const auto two = parse_presentation("hfhg = fhgf\n  g f (h g)^(-2) = f (hg)^-2 h ;");
        CHECK(two.relations.size() == 2);
        CHECK(two.relations[1].lhs == parse_word("gfGHGH"));
    }

    TEST_CASE("normal form") {
        CHECK(parse_word("fFg") == parse_word("g"));
        CHECK(parse_word("f^2f^-1") == parse_word("f"));
        CHECK(parse_word("ff").letters() == std::vector<Letter>{{'f', 2}});
        CHECK(parse_word("(hg)^-1") == parse_word("GH"));
        CHECK(parse_word("gG").empty());
        CHECK(parse_word("(fg)^0").empty());
        CHECK(parse_word("f^-1") == parse_word("F"));
    }

    TEST_CASE("errors") {
        try {
            parse_presentation("hfxg=fhgf");
            FAIL("expected an error");
        } catch (const PresentationError& e) {
            CHECK(e.position() == 2);
            CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_presentation("hf(g=f"), PresentationError);
        CHECK_THROWS_AS(parse_presentation("hfhg"), PresentationError);
        CHECK_THROWS_AS(parse_presentation(""), PresentationError);
        CHECK_THROWS_AS(parse_presentation("f^=g"), PresentationError);
    }

    TEST_CASE("family presentation") {
        CHECK(family_presentation(7) == "hfhg = fhgf; gf(hg)^(3) = f(hg)^(3)h");
        const auto p = parse_presentation(family_presentation(-3));
        CHECK(p.relations[1].lhs == parse_word("gf(GH)^2"));
        CHECK_THROWS_AS(family_presentation(3), FamilyIndexError);
    }
}

TEST_SUITE("matrices") {
    TEST_CASE("generator images") {
        const auto s = generator_matrices(Parametrization::Standard);
        CHECK(s.h == Mat2{P("1"), P("-1"), P("0"), P("1")});
        const auto one = P("1");
        CHECK(s.f.det() == one);
        CHECK(s.g.det() == one);
        const auto inv = generator_matrices(Parametrization::InvertedV);
        CHECK(inv.f.det() == MultiPolynomial::constant(inv.f.a.vars(), Rational(1)));
        CHECK(inv.g.c == P("w^2", inv.g.c.vars()));
        CHECK(parse_parametrization("inverted_v") == Parametrization::InvertedV);
        CHECK_THROWS_AS(parse_parametrization("other"), std::invalid_argument);
    }

    TEST_CASE("word evaluation laws") {
        for (Parametrization par : {Parametrization::Standard, Parametrization::InvertedV}) {
            const auto m = generator_matrices(par);
            const auto& vars = m.h.a.vars();
            const Mat2 id = Mat2::identity(vars);
            const auto one = MultiPolynomial::constant(vars, Rational(1));
            CHECK(eval_word(m, GroupWord()) == id);
            std::mt19937_64 rng(par == Parametrization::Standard ? 1 : 2);
            for (int i = 0; i < 200; ++i) {
                const GroupWord a = random_word(rng), b = random_word(rng);
                const Mat2 ea = eval_word(m, a);
                CHECK(ea.det() == one);
                CHECK(eval_word(m, a * a.inverse()) == id);
                CHECK(ea * eval_word(m, a.inverse()) == id);
                CHECK(eval_word(m, a * b) == ea * eval_word(m, b));
            }
        }
    }

    TEST_CASE("entry formulas") {
        const auto m = generator_matrices(Parametrization::Standard);
        const auto first = parse_presentation("hfhg = fhgf").relations[0];
        const Mat2 res = relation_residue(m, first);
        CHECK(res.trace() == P("(u-v-1)*(u-v+1)*w"));
        CHECK(res.a.substitute("u", P("v+1")) == P("v^2*(v*w - (v+1)*(v+2))"));

        const auto r235 = parse_presentation("hfhfG = fhfGf").relations[0];
        CHECK(relation_residue(m, r235).d == P("v*(u*(u^2-1) + w*v*(u^2-1+u*v*(u^2-2)))"));

        const auto inv = generator_matrices(Parametrization::InvertedV);
        const auto& lv = inv.h.a.vars();
        const auto r334 = parse_presentation("GFgfg = HFhfh").relations[0];
        const auto expected = P("-u*(u*(v^4-v^3+v*w^2+w^4) - v*(v^2+w^2))", lv) * MultiPolynomial::variable(lv, "v", -2);
        CHECK(relation_residue(inv, r334).a == expected);
    }
}

TEST_SUITE("substitution") {
    TEST_CASE("chain examples") {
        const auto chain = parse_chain("w = (v+1)*(v+2)/v", kStd);
        REQUIRE(chain.size() == 1);
        CHECK(apply_substitution_chain(P("v^2*(v*w - (v+1)*(v+2))"), chain).is_zero());

        const VariableSet xy({"x", "y"}, {"x"});
        CHECK(apply_substitution_chain(P("x + y", xy), parse_chain("y = 1/x", xy)) == P("x^2 + 1", xy));

        const auto untouched = apply_substitution_chain(P("6*u^2 + 4*v"), parse_chain("w = u + 1", kStd));
        CHECK(untouched == P("3*u^2 + 2*v"));
        CHECK(apply_substitution_chain(P("u + v"), {}) == P("u + v"));
    }

    TEST_CASE("chain parsing") {
        const auto chain = parse_chain("w = u*(1-u^2)/(v*(u^2-1+u*v*(u^2-2)));\nv = (u-1)/(1+u-u^2)", kStd);
        REQUIRE(chain.size() == 2);
        CHECK(chain[0].var == "w");
        CHECK(chain[1].den == P("1 + u - u^2"));
        CHECK_THROWS_AS(parse_chain("w u", kStd), std::invalid_argument);
        CHECK_THROWS_AS(parse_chain("x = u", kStd), std::invalid_argument);
        CHECK_THROWS_AS(parse_chain("w = w + 1", kStd), std::invalid_argument);
    }

    TEST_CASE("zero denominator") {
        CHECK_THROWS_AS(P("u*w").substitute_fraction("w", P("1"), P("0")), std::domain_error);
    }
}

TEST_SUITE("riley polynomials") {
    TEST_CASE("built-in knots") {
        const std::vector<std::pair<std::string, std::string>> cases = {
            {"2,3,5", "p_2_3_5"}, {"2,3,-5", "p_2_3_-5"}, {"-3,3,4", "p_-3_3_4"}};
        const std::vector<int> degrees = {17, 11, 7};
        for (std::size_t i = 0; i < cases.size(); ++i) {
            CAPTURE(cases[i].first);
            const auto r = riley_polynomial(cases[i].first);
            CHECK(r.matches);
            CHECK(normalize_sign(r.derivation.polynomial) == golden_poly(cases[i].second));
            CHECK(r.derivation.polynomial.degree() == degrees[i]);
            CHECK(r.irreducibility.irreducible);
            CHECK(r.derivation.first_relations_vanish);
            CHECK(r.derivation.side_conditions);
            for (const auto& e : r.derivation.entry_numerators) CHECK(try_divide(e, r.derivation.polynomial).has_value());
        }
        CHECK_THROWS_AS(riley_polynomial("3,3,3"), std::invalid_argument);
    }

    TEST_CASE("degenerate chain") {
        const auto& k = knot_data("2,3,5");
        const auto pres = parse_presentation(k.presentation);
        const auto chain = parse_chain("w = u/(v - u + 1); v = u - 1", kStd);
        CHECK_THROWS_AS(derive_riley(pres, Parametrization::Standard, chain, "u"), DegenerateSubstitution);
        const auto partial = parse_chain("w = u*(1-u^2)/(v*(u^2-1+u*v*(u^2-2)))", kStd);
        CHECK_THROWS_AS(derive_riley(pres, Parametrization::Standard, partial, "u"), std::invalid_argument);
    }

    TEST_CASE("family residue") {
        for (int n : {-1, -3, -5, -7, -9, 7, 9}) {
            CAPTURE(n);
            const auto r = family_residue_check(n);
            CHECK(r.ok());
            CHECK(r.first_relation_zero);
            CHECK(r.entries[0].zero);
            for (const auto& e : r.entries) {
                if (!e.zero) CHECK(e.cofactor_coprime);
            }
        }
        CHECK(family_residue_check(-49).ok());
        CHECK_THROWS_AS(family_residue_check(-51), std::invalid_argument);
        CHECK(family_residue_check(-51, 51).ok());
        CHECK_THROWS_AS(family_residue_check(5), FamilyIndexError);
    }
}
