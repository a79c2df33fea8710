#include "ptk/pretzel.hpp"

#include <map>
#include <mutex>

namespace ptk {

namespace {

const IntegerRing kZ{};

ZPoly zpoly(std::vector<long> cs, const char* var) { return ZPoly::from_ints(kZ, cs, var); }

class FamilyTable {
public:
    ZPoly p(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (p_.empty()) {
            p_.emplace(-1, zpoly({1, 1, 2, 1}, "v"));
            p_.emplace(-3, zpoly({-2, -4, -5, -4, -3, -1}, "v"));
            p_.emplace(7, zpoly({-8, -8, -2, -1}, "v"));
            p_.emplace(9, zpoly({16, 24, 16, 10, 4, 1}, "v"));
        }
        if (auto it = p_.find(n); it != p_.end()) return it->second;
        const ZPoly a = zpoly({2, 1, 1}, "v");  // v^2 + v + 2
        const ZPoly v2 = zpoly({0, 0, 1}, "v");
        // Walk outward from the base cases so each step reuses the two previous entries.
        const int step = n < 0 ? -2 : 2;
        int m = n < 0 ? -5 : 11;
        for (; n < 0 ? m >= n : m <= n; m += step) {
            if (p_.count(m) != 0) continue;
            const ZPoly& near = p_.at(m - step);
            const ZPoly& far = p_.at(m - 2 * step);
            p_.emplace(m, -(a * near + v2 * far));
        }
        return p_.at(n);
    }

    ZPoly q(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (q_.empty()) {
            q_.emplace(-1, zpoly({-7, 2, -1, 1}, "w"));
            q_.emplace(-3, zpoly({-9, 3, 5, -2, -2, 1}, "w"));
            q_.emplace(-5, zpoly({-7, 2, -7, 4, 8, -4, -2, 1}, "w"));
        }
        if (auto it = q_.find(n); it != q_.end()) return it->second;
        const ZPoly w2m1 = zpoly({-1, 0, 1}, "w");
        for (int m = -7; m >= n; m -= 2) {
            if (q_.count(m) != 0) continue;
            q_.emplace(m, w2m1 * (q_.at(m + 2) - q_.at(m + 4)) + q_.at(m + 6));
        }
        return q_.at(n);
    }

private:
    std::mutex mutex_;
    std::map<int, ZPoly> p_;
    std::map<int, ZPoly> q_;
};

FamilyTable& table() {
    static FamilyTable t;
    return t;
}

bool divisible_by_three(int n) { return n % 3 == 0; }

FpPoly fp3(std::vector<long> cs, const char* var) { return FpPoly::from_ints(PrimeField(3), cs, var); }

int multiplicity_of_linear(const FpPoly& f, const FpPoly& linear) {
    if (f.is_zero()) return -1;
    int m = 0;
    FpPoly g = f;
    while (true) {
        auto [q, r] = divrem(g, linear);
        if (!r.is_zero()) return m;
        g = q;
        ++m;
    }
}

}  // namespace

int mod_floor(int n, int m) { return ((n % m) + m) % m; }

void validate_family_index(int n) {
    if (n % 2 == 0) throw FamilyIndexError("n must be odd (got " + std::to_string(n) + ")");
    if (n == 1 || n == 3 || n == 5) throw FamilyIndexError("n must not be 1, 3, or 5 (got " + std::to_string(n) + ")");
}

void validate_negative_index(int n) {
    if (n % 2 == 0) throw FamilyIndexError("n must be odd (got " + std::to_string(n) + ")");
    if (n >= 0) throw FamilyIndexError("n must be negative (got " + std::to_string(n) + ")");
}

ZPoly gen_p(int n) {
    validate_family_index(n);
    return table().p(n);
}

ZPoly gen_q(int n) {
    validate_negative_index(n);
    return table().q(n);
}

ProductIdentity check_product_identity(int n) {
    validate_negative_index(n);
    const ZPoly v = ZPoly::variable(kZ, "v");
    const ZPoly num = v.scale(Integer(2)) - zpoly({1, 1}, "v") * zpoly({2, 1}, "v");
    ProductIdentity out;
    // substitute_rational clears den^deg(q_n) = v^(2-n).
    out.lhs = substitute_rational(gen_q(n), num, v);
    out.rhs = gen_p(n) * gen_p(6 - n);
    out.holds = out.lhs == out.rhs;
    return out;
}

ReciprocalCheck check_reciprocal(int n) {
    validate_negative_index(n);
    const ZPoly pn = gen_p(n);
    const ZPoly pm = gen_p(6 - n);
    const ZPoly scaled = substitute_rational(pm, zpoly({2}, "v"), ZPoly::variable(kZ, "v"));
    ReciprocalCheck out;
    if (scaled.degree() != pn.degree() || !divides(pn.lc(), scaled.lc())) return out;
    out.constant = divexact(scaled.lc(), pn.lc());
    out.proportional = scaled == pn.scale(out.constant);
    out.holds = out.proportional && abs(out.constant) == pow(Integer(2), static_cast<unsigned long>((5 - n) / 2));
    return out;
}

LaurentPolynomial<IntegerRing> gen_f(int k) {
    if (k < 2) throw std::invalid_argument("gen_f needs k >= 2");
    // x * bracket = x^(1-2k) * body with body = x^(4k) + 1 + x^(2k+3) + 4x^(2k+2) - 8x^(2k) + 4x^(2k-2) + x^(2k-3)
    std::vector<Integer> body(static_cast<std::size_t>(4 * k + 1), Integer(0));
    auto add = [&](int e, long c) { body[static_cast<std::size_t>(e)] += Integer(c); };
    add(4 * k, 1);
    add(0, 1);
    add(2 * k + 3, 1);
    add(2 * k + 2, 4);
    add(2 * k, -8);
    add(2 * k - 2, 4);
    add(2 * k - 3, 1);
    const ZPoly numerator(kZ, std::move(body), "x");
    const auto quotient = try_divide(numerator, zpoly({1, 2, 1}, "x"));
    if (!quotient) throw std::logic_error("f_k numerator is not divisible by (x+1)^2");
    return LaurentPolynomial<IntegerRing>(*quotient, 1 - 2 * k);
}

bool check_laurent_identity(int n) {
    validate_negative_index(n);
    return substitute_symmetric(gen_q(n), "x") == gen_f((3 - n) / 2);
}

FpPoly gen_g_mod3(int n) {
    validate_negative_index(n);
    const PrimeField f3(3);
    const PolynomialRing<PrimeField> base{f3, "v"};
    const FpPoly a = fp3({-1, 1, 1}, "v");
    const FpPoly d = fp3({-1, 0, 1}, "v") * fp3({-1, -1, 1}, "v");
    const QuadRing<PolynomialRing<PrimeField>> ring(base, d);
    const auto plus = ring.make(a, base.one());
    const auto minus = ring.make(a, base.neg(base.one()));
    const unsigned long k = static_cast<unsigned long>((1 - n) / 2);
    auto bracket = ring.sub(quad_pow(ring, plus, k), quad_pow(ring, minus, k));
    bracket = ring.sub(bracket, quad_pow(ring, plus, k + 2));
    bracket = ring.add(bracket, quad_pow(ring, minus, k + 2));
    if (!bracket.a.is_zero()) throw std::logic_error("g_n bracket has a nonzero pure part");
    return bracket.b.with_var("v");
}

GIdentity check_g_identity(int n) {
    const FpPoly g = gen_g_mod3(n);
    const FpPoly vp = FpPoly::variable(PrimeField(3), "v") * reduce_mod(gen_p(n), 3);
    GIdentity out;
    if (g == vp) out.sign = 1;
    else if (g == -vp) out.sign = -1;
    out.holds = out.sign != 0;
    return out;
}

SpecialValues special_values(int n) {
    validate_negative_index(n);
    const ZPoly q = gen_q(n);
    const ZPoly p = gen_p(n);
    SpecialValues s;
    s.n = n;
    s.q_at_0 = eval(q, Integer(0));
    s.q_at_1 = eval(q, Integer(1));
    s.q_at_neg1 = eval(q, Integer(-1));
    s.q_at_2 = eval(q, Integer(2));
    const QuadRing<IntegerRing> zr3(kZ, Integer(3));
    s.q_at_sqrt3 = eval_in(q, zr3, zr3.root(), [&](const Integer& c) { return zr3.embed(c); });
    s.p_const = p.coeff(0);
    const PrimeField f3(3);
    s.p_at_1_mod3 = f3.from_integer(eval(p, Integer(1)));
    s.p_at_neg1_mod3 = f3.from_integer(eval(p, Integer(-1)));
    s.w2_coeff_mod3 = f3.from_integer(q.coeff(2));
    return s;
}

std::vector<std::string> check_special_values(const SpecialValues& s) {
    std::vector<std::string> failures;
    const int n = s.n;
    const int t = -(n + 1) / 2;  // >= 0
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };
    expect(s.q_at_2 == Integer(1), "q_n(2) != 1");
    const Integer c0 = mod_floor(n, 4) == 3 ? Integer(-7) : Integer(-9);
    expect(s.q_at_0 == c0, "q_n(0) != " + c0.to_string());
    if (divisible_by_three(n) && mod_floor(n, 4) == 1) {
        expect(s.q_at_1 == Integer(-4), "q_n(1) != -4");
        expect(s.q_at_neg1 == Integer(-8), "q_n(-1) != -8");
        expect(s.q_at_sqrt3.a == Integer(-12) && s.q_at_sqrt3.b == Integer(6), "q_n(sqrt 3) != -12 + 6 sqrt 3");
    }
    expect(s.p_const == pow(Integer(-2), static_cast<unsigned long>(t)), "p_n(0) != (-2)^(-(n+1)/2)");
    expect(s.p_at_1_mod3.value == 2, "p_n(1) != -1 mod 3");
    expect(s.p_at_neg1_mod3.value == (t % 2 == 0 ? 1U : 2U), "p_n(-1) != (-1)^(-(n+1)/2) mod 3");
    const int j = (-1 - n) / 2;
    const std::uint32_t w2 = j % 6 < 3 ? 2 : 1;
    expect(s.w2_coeff_mod3.value == w2, "w^2 coefficient of q_n mod 3 != " + std::to_string(w2));
    return failures;
}

Mod2Report check_mod2_pattern(int n, std::uint64_t seed) {
    validate_negative_index(n);
    Mod2Report r;
    r.n = n;
    const ZPoly q = gen_q(n);
    const FpPoly q2 = reduce_mod(q, 2);
    r.pattern = factor_modp(q2, seed);
    const PrimeField f2(2);
    const FpPoly wp1 = FpPoly::from_ints(f2, {1, 1}, "w");
    const FpPoly w = FpPoly::variable(f2, "w");
    r.e = r.pattern.multiplicity_of(wp1);
    r.expected_e = divisible_by_three(n) ? 2 : 0;
    if (r.e != r.expected_e) {
        r.failures.push_back("multiplicity of w+1 is " + std::to_string(r.e) + ", expected " + std::to_string(r.expected_e));
    }
    if (r.pattern.multiplicity_of(w) != 0) r.failures.push_back("w divides q_n mod 2");
    for (const auto& fp : r.pattern.factors) {
        if (fp.factor == wp1) continue;
        if (fp.multiplicity != 1) r.failures.push_back("repeated factor " + to_pretty(fp.factor));
        if (fp.factor.degree() < 2) r.failures.push_back("linear factor " + to_pretty(fp.factor));
    }
    r.derivative_identity = q2 - w * derivative(q2) == wp1 * wp1;
    if (!r.derivative_identity) r.failures.push_back("q_n - w q_n' != (w+1)^2 mod 2");
    if (!(r.pattern.product("w") == q2)) r.failures.push_back("factor pattern does not multiply back to q_n mod 2");
    return r;
}

Mod3Report check_mod3_structure(int n) {
    validate_negative_index(n);
    Mod3Report r;
    r.n = n;
    r.three_divides = divisible_by_three(n);
    const PrimeField f3(3);
    if (r.three_divides) {
        const FpPoly w = FpPoly::variable(f3, "w");
        const FpPoly q = reduce_mod(gen_q(n), 3);
        r.w_multiplicity = multiplicity_of_linear(q, w);
        r.expected_w_multiplicity = mod_floor(n, 4) == 3 ? 0 : 2;
        if (r.w_multiplicity != r.expected_w_multiplicity) {
            r.failures.push_back("w-multiplicity of q_n mod 3 is " + std::to_string(r.w_multiplicity) + ", expected " +
                                 std::to_string(r.expected_w_multiplicity));
        }
        const FpPoly one_minus_w = FpPoly::from_ints(f3, {1, -1}, "w");
        r.derivative_identity = q - one_minus_w * derivative(q) == -w;
        if (!*r.derivative_identity) r.failures.push_back("q_n - (1-w) q_n' != -w mod 3");
        if (n + 4 < 0) {
            const FpPoly a = reduce_mod(gen_q(n + 2), 3), b = reduce_mod(gen_q(n + 4), 3);
            const FpPoly w2m1 = FpPoly::from_ints(f3, {-1, 0, 1}, "w");
            r.combination_identity = (a - b + w2m1 * (derivative(a) - derivative(b))).is_zero();
            if (!*r.combination_identity) r.failures.push_back("q_(n+2) - q_(n+4) + (w^2-1)(q'_(n+2) - q'_(n+4)) != 0 mod 3");
        }
    } else {
        const FpPoly g = gen_g_mod3(n);
        r.g_coprime = gcd(g, derivative(g)).is_one();
        if (!*r.g_coprime) r.failures.push_back("gcd(g_n, g_n') != 1 mod 3");
        const FpPoly p = reduce_mod(gen_p(n), 3);
        r.p_squarefree_mod3 = gcd(p, derivative(p)).is_one();
        if (!*r.p_squarefree_mod3) r.failures.push_back("p_n mod 3 is not squarefree");
    }
    return r;
}

std::vector<std::string> check_family_invariants(int n) {
    validate_family_index(n);
    std::vector<std::string> failures;
    const ZPoly p = gen_p(n);
    const int expected = n < 0 ? 2 - n : n - 4;
    if (p.degree() != expected) failures.push_back("deg p_n != " + std::to_string(expected));
    if (n < 0) {
        const ZPoly q = gen_q(n);
        if (q.degree() != 2 - n) failures.push_back("deg q_n != 2 - n");
        if (!q.lc().is_one()) failures.push_back("q_n is not monic");
    }
    return failures;
}

ordered_json to_json(const SpecialValues& s) {
    ordered_json j;
    j["n"] = s.n;
    j["q_at_0"] = s.q_at_0.to_string();
    j["q_at_1"] = s.q_at_1.to_string();
    j["q_at_neg1"] = s.q_at_neg1.to_string();
    j["q_at_2"] = s.q_at_2.to_string();
    j["q_at_sqrt3"] = ordered_json{{"a", s.q_at_sqrt3.a.to_string()}, {"b", s.q_at_sqrt3.b.to_string()}};
    j["p_const"] = s.p_const.to_string();
    j["p_at_1_mod3"] = s.p_at_1_mod3.value;
    j["p_at_neg1_mod3"] = s.p_at_neg1_mod3.value;
    j["w2_coeff_mod3"] = s.w2_coeff_mod3.value;
    return j;
}

ordered_json to_json(const Mod2Report& r) {
    ordered_json j;
    j["n"] = r.n;
    j["e"] = r.e;
    j["expected_e"] = r.expected_e;
    j["derivative_identity"] = r.derivative_identity;
    j["pattern"] = to_json(r.pattern);
    j["failures"] = r.failures;
    return j;
}

ordered_json to_json(const Mod3Report& r) {
    ordered_json j;
    j["n"] = r.n;
    j["three_divides"] = r.three_divides;
    if (r.three_divides) {
        j["w_multiplicity"] = r.w_multiplicity;
        j["expected_w_multiplicity"] = r.expected_w_multiplicity;
        if (r.derivative_identity) j["derivative_identity"] = *r.derivative_identity;
        if (r.combination_identity) j["combination_identity"] = *r.combination_identity;
    } else {
        if (r.g_coprime) j["g_coprime"] = *r.g_coprime;
        if (r.p_squarefree_mod3) j["p_squarefree_mod3"] = *r.p_squarefree_mod3;
    }
    j["failures"] = r.failures;
    return j;
}

}  // namespace ptk
