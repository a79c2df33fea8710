#include <doctest.h>

#include <thread>

#include "ptk/pretzel.hpp"
#include "test_support.hpp"

using namespace ptk;

namespace {

const IntegerRing Z{};

ZPoly zp(std::vector<long> cs, const std::string& var) { return ZPoly::from_ints(Z, cs, var); }

std::vector<int> full_range() {
    std::vector<int> out;
    for (int n = -1; n >= -49; n -= 2) out.push_back(n);
    return out;
}

}  // namespace

TEST_SUITE("generators") {
    TEST_CASE("golden polynomials") {
        for (int n : {-1, -3, -5, -7, -49, 7, 9, 11, 13}) {
            const std::string name = "p_" + std::to_string(n) + ".poly";
            CAPTURE(name);
            CHECK(to_canonical(gen_p(n)) == support::read_golden(name));
        }
        for (int n : {-1, -3, -5, -7, -9, -49}) {
            const std::string name = "q_" + std::to_string(n) + ".poly";
            CAPTURE(name);
            CHECK(to_canonical(gen_q(n)) == support::read_golden(name));
        }
        CHECK(to_pretty(gen_q(-3)) == "w^5 - 2*w^4 - 2*w^3 + 5*w^2 + 3*w - 9");
        CHECK(to_pretty(gen_p(7)) == "-(v^3 + 2*v^2 + 8*v + 8)");
        CHECK(gen_p(-5) == zp({4, 10, 15, 16, 13, 8, 4, 1}, "v"));
    }

    TEST_CASE("index errors") {
        CHECK_THROWS_AS(gen_p(2), FamilyIndexError);
        CHECK_THROWS_AS(gen_p(3), FamilyIndexError);
        CHECK_THROWS_AS(gen_p(1), FamilyIndexError);
        CHECK_THROWS_AS(gen_q(7), FamilyIndexError);
        CHECK_THROWS_AS(gen_q(-4), FamilyIndexError);
    }

    TEST_CASE("degree and constant laws") {
        for (int n : full_range()) {
            CAPTURE(n);
            CHECK(check_family_invariants(n).empty());
            CHECK(check_family_invariants(6 - n).empty());
        }
    }

    TEST_CASE("concurrent generation agrees") {
        std::vector<ZPoly> results(8, ZPoly(Z));
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < results.size(); ++i) {
            threads.emplace_back([&results, i] { results[i] = (i % 2 == 0) ? gen_q(-47) : gen_p(-47); });
        }
        for (auto& t : threads) t.join();
        for (std::size_t i = 2; i < results.size(); ++i) CHECK(results[i] == results[i % 2]);
    }
}

TEST_SUITE("identities") {
    TEST_CASE("product identity") {
        for (int n : {-1, -3, -49}) {
            auto r = check_product_identity(n);
            CHECK(r.holds);
            CHECK(r.lhs.degree() == 2 * (2 - n) - 4 + 4);  // deg p_n + deg p_(6-n)
        }
    }

    TEST_CASE("reciprocal constants") {
        const auto golden = support::read_golden_json("pretzel_constants.json")["reciprocal_constant"];
        for (const auto& [key, value] : golden.items()) {
            const int n = std::stoi(key);
            auto r = check_reciprocal(n);
            CAPTURE(n);
            CHECK(r.holds);
            CHECK(r.constant.to_string() == value.get<std::string>());
        }
        for (int n : full_range()) CHECK(check_reciprocal(n).holds);
    }

    TEST_CASE("Laurent closed form") {
        CHECK(gen_f(2) == substitute_symmetric(gen_q(-1), "x"));
        CHECK(gen_f(3) == substitute_symmetric(gen_q(-3), "x"));
        for (int k = 2; k <= 26; ++k) CHECK_NOTHROW(gen_f(k));
        CHECK_THROWS_AS(gen_f(1), std::invalid_argument);
        for (int n : {-1, -5, -49}) CHECK(check_laurent_identity(n));
        for (int k = 2; k <= 26; ++k) CHECK(gen_f(k).is_palindromic());
    }

    TEST_CASE("mod 3 closed form for p_n") {
        CHECK(gen_g_mod3(-1) == FpPoly::from_ints(PrimeField(3), {0, 1, 1, 2, 1}, "v"));
        const auto golden = support::read_golden_json("pretzel_constants.json")["g_sign"];
        for (const auto& [key, value] : golden.items()) {
            const int n = std::stoi(key);
            CAPTURE(n);
            auto r = check_g_identity(n);
            CHECK(r.holds);
            CHECK(r.sign == value.get<int>());
        }
    }
}

TEST_SUITE("special values and reductions") {
    TEST_CASE("examples") {
        auto s3 = special_values(-3);
        CHECK(s3.q_at_0 == Integer(-9));
        CHECK(s3.q_at_1 == Integer(-4));
        CHECK(s3.q_at_neg1 == Integer(-8));
        CHECK(s3.q_at_2 == Integer(1));
        CHECK(s3.q_at_sqrt3.a == Integer(-12));
        CHECK(s3.q_at_sqrt3.b == Integer(6));
        auto s1 = special_values(-1);
        CHECK(s1.q_at_0 == Integer(-7));
        CHECK(s1.q_at_2 == Integer(1));
        CHECK(s1.p_const == Integer(1));
        auto s5 = special_values(-5);
        CHECK(s5.p_const == Integer(4));
        CHECK(s5.w2_coeff_mod3.value == 2);
        for (int n : full_range()) {
            CAPTURE(n);
            CHECK(check_special_values(special_values(n)).empty());
        }
    }

    TEST_CASE("mod 2 pattern") {
        auto r1 = check_mod2_pattern(-1);
        CHECK(r1.ok());
        CHECK(r1.e == 0);
        REQUIRE(r1.pattern.factors.size() == 1);
        CHECK(r1.pattern.factors[0].factor == FpPoly::from_ints(PrimeField(2), {1, 0, 1, 1}, "w"));
        CHECK(check_mod2_pattern(-3).e == 2);
        CHECK(check_mod2_pattern(-9).e == 2);
        for (int n : full_range()) {
            CAPTURE(n);
            CHECK(check_mod2_pattern(n).ok());
        }
    }

    TEST_CASE("mod 3 structure") {
        auto r3 = check_mod3_structure(-3);
        CHECK(r3.ok());
        CHECK(r3.w_multiplicity == 2);
        CHECK(r3.derivative_identity.value());
        CHECK_FALSE(r3.combination_identity.has_value());
        auto r9 = check_mod3_structure(-9);
        CHECK(r9.w_multiplicity == 0);
        CHECK(r9.combination_identity.value());
        auto r1 = check_mod3_structure(-1);
        CHECK(r1.g_coprime.value());
        CHECK(r1.p_squarefree_mod3.value());
        for (int n : full_range()) {
            CAPTURE(n);
            CHECK(check_mod3_structure(n).ok());
        }
    }

    TEST_CASE("discriminant divisibility matches squarefreeness mod p") {
        for (int n : full_range()) {
            for (const ZPoly& f : {gen_p(n), gen_q(n), gen_p(6 - n)}) {
                const Integer d = discriminant(f);
                for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
                    const FpPoly fp = reduce_mod(f, p);
                    if (fp.degree() != f.degree()) continue;  // leading coefficient vanishes mod p
                    CAPTURE(n);
                    CAPTURE(p);
                    CHECK(divides(Integer(static_cast<long>(p)), d) == !gcd(fp, derivative(fp)).is_one());
                }
            }
        }
    }

    TEST_CASE("splitting types of q_n sum to the degree") {
        for (int n : full_range()) {
            for (std::uint32_t p : {2U, 3U}) {
                CAPTURE(n);
                CAPTURE(p);
                const auto st = splitting_type(gen_q(n), p, {false, 0});
                CHECK(st.degree() == gen_q(n).degree());
                if (factor_modp(reduce_mod(gen_q(n), p)).is_squarefree()) CHECK(st.is_unramified());
            }
        }
    }
}
