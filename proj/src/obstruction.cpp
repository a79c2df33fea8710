#include "ptk/obstruction.hpp"

#include <algorithm>
#include <array>

namespace ptk {

namespace {

const IntegerRing kZ{};

std::string name_of(const char* family, int n) { return std::string(family) + "_" + std::to_string(n); }

std::vector<Integer> signed_divisors(const Integer& value) {
    const Integer a = abs(value);
    if (!a.fits_long()) throw std::invalid_argument("anchor value too large for divisor enumeration");
    const long m = a.to_long();
    std::vector<long> pos;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        pos.push_back(d);
        if (d != m / d) pos.push_back(m / d);
    }
    std::sort(pos.begin(), pos.end());
    std::vector<Integer> out;
    for (long d : pos) {
        out.emplace_back(d);
        out.emplace_back(-d);
    }
    return out;
}

bool is_linear_square(const FpPoly& target) {
    if (target.degree() != 2 || !target.lc().value) return false;
    const auto& field = target.ring();
    if (field.modulus() > 100000) throw std::invalid_argument("quadratic_factor_search: prime too large");
    for (std::uint32_t r = 0; r < field.modulus(); ++r) {
        const FpPoly lin = FpPoly::from_ints(field, {static_cast<long>(r), 1}, target.var());
        if (lin * lin == target) return true;
    }
    return false;
}

struct Plan {
    TargetField target;
    std::string case_tag;
    std::string name;
    ZPoly poly{kZ};
    std::uint32_t prime;
    std::vector<LemmaFact> lemmas;
    std::optional<FpPoly> search_target;
    std::vector<std::string> assumptions;
};

bool has_simple_factor(const FactorPattern& pattern) {
    return std::any_of(pattern.factors.begin(), pattern.factors.end(),
                       [](const FactorPower& fp) { return fp.multiplicity == 1; });
}

bool has_unramified_entry(const SplittingType& st) {
    return std::any_of(st.entries.begin(), st.entries.end(), [](const SplittingEntry& e) { return e.e == 1; });
}

FactorEvidence examine_factor(const ZPoly& factor, std::uint32_t p, const std::string& case_tag, std::uint64_t seed) {
    FactorEvidence ev;
    ev.factor = factor;
    const FpPoly reduced = reduce_mod(factor, p);
    if (reduced.degree() != factor.degree()) throw std::invalid_argument("leading coefficient vanishes mod p");
    ev.pattern = factor_modp(reduced, seed);
    ev.disc_valuation = valuation(discriminant(factor), Integer(static_cast<long>(p)));
    const bool squarefree = ev.pattern.is_squarefree();

    if (squarefree != (ev.disc_valuation == 0)) {
        throw ChainDisagreement("squarefree reduction mod " + std::to_string(p) + " disagrees with v_p(disc) = " +
                                std::to_string(ev.disc_valuation) + " for " + to_pretty(factor));
    }
    if (!squarefree) {
        try {
            ev.splitting = splitting_type(factor, p, {false, seed});
        } catch (const UnsupportedShape& e) {
            ev.splitting_note = e.what();
        }
    }

    ev.lemma_route = case_tag == kCaseSquarefree ? squarefree : has_simple_factor(ev.pattern);
    ev.direct_route = ev.disc_valuation == 0 || (ev.splitting && has_unramified_entry(*ev.splitting));

    // A simple factor mod p lifts to an unramified prime, so the splitting type must show one.
    if (ev.splitting && has_simple_factor(ev.pattern) && !has_unramified_entry(*ev.splitting)) {
        throw ChainDisagreement("simple factor mod " + std::to_string(p) + " but no unramified prime in " +
                                to_string(*ev.splitting));
    }
    return ev;
}

Certificate build(int n, Plan plan, std::uint64_t seed) {
    Certificate c;
    c.n = n;
    c.target = plan.target;
    c.case_tag = plan.case_tag;
    c.polynomial_name = plan.name;
    c.polynomial = plan.poly;
    c.prime = plan.prime;
    c.irreducibility = irreducible_over_Q(plan.poly, seed);
    c.assumptions = std::move(plan.assumptions);

    if (plan.search_target) {
        c.quadratic_search = quadratic_factor_search(plan.poly, *plan.search_target, plan.prime);
        plan.lemmas.push_back({"no quadratic factor of " + plan.name + " reduces to " + to_pretty(*plan.search_target) +
                                   " mod " + std::to_string(plan.prime),
                               c.quadratic_search->factors.empty()});
    }
    c.lemmas = std::move(plan.lemmas);

    std::vector<ZPoly> irreducible_factors;
    if (c.irreducibility.irreducible) {
        irreducible_factors.push_back(plan.poly);
    } else {
        for (const auto& [g, m] : factor_over_Z(plan.poly, seed).factors) irreducible_factors.push_back(g);
    }
    for (const auto& g : irreducible_factors) c.factors.push_back(examine_factor(g, plan.prime, plan.case_tag, seed));

    const bool lemmas_hold =
        std::all_of(c.lemmas.begin(), c.lemmas.end(), [](const LemmaFact& f) { return f.holds; });
    const bool lemma_chain = lemmas_hold && std::all_of(c.factors.begin(), c.factors.end(),
                                                        [](const FactorEvidence& e) { return e.lemma_route; });
    const bool direct_chain =
        std::all_of(c.factors.begin(), c.factors.end(), [](const FactorEvidence& e) { return e.direct_route; });
    const bool odd_degree = c.irreducibility.irreducible && plan.poly.degree() % 2 != 0;

    if (lemma_chain && !direct_chain) {
        // Only possible when a splitting type was unavailable; a computed one already matched.
        const bool all_computed = std::all_of(c.factors.begin(), c.factors.end(), [](const FactorEvidence& e) {
            return e.disc_valuation == 0 || e.splitting.has_value();
        });
        if (all_computed) throw ChainDisagreement("lemma chain complete but direct chain is not for " + plan.name);
    }

    c.chains = {{plan.case_tag, lemma_chain}, {"discriminant_valuation", direct_chain}, {kCaseOddDegree, odd_degree}};
    const bool any = lemma_chain || direct_chain || odd_degree;
    c.verdict = any ? Verdict::NotSubfield : Verdict::Inconclusive;
    return c;
}

std::string trace_field_assumption(const std::string& name) {
    return "k_n = Q(alpha) for a root alpha of an irreducible factor of " + name;
}

}  // namespace

std::string to_string(TargetField target) { return target == TargetField::QI ? "Q(i)" : "Q(sqrt(-3))"; }

std::string to_string(Verdict verdict) { return verdict == Verdict::NotSubfield ? "not_subfield" : "inconclusive"; }

bool Certificate::chain_complete(const std::string& chain) const {
    return std::any_of(chains.begin(), chains.end(),
                       [&](const ChainResult& c) { return c.name == chain && c.complete; });
}

ConjectureCheck verify_conjecture(int n, std::uint64_t seed) {
    validate_negative_index(n);
    ConjectureCheck out;
    out.n = n;
    out.p_witness = irreducible_over_Q(gen_p(n), seed);
    out.q_witness = irreducible_over_Q(gen_q(n), seed);
    out.p_irreducible = out.p_witness.irreducible;
    out.q_irreducible = out.q_witness.irreducible;
    return out;
}

QuadraticSearch quadratic_factor_search(const ZPoly& f, const FpPoly& target, std::uint32_t p) {
    if (target.ring().modulus() != p || !is_linear_square(target)) {
        throw std::invalid_argument("target must be the square of a monic linear polynomial mod p");
    }
    QuadraticSearch out;
    out.prime = p;
    out.target_lift = lift_nonnegative(target).with_var(f.var());

    constexpr std::array<int, 4> points{0, 2, 1, -1};
    std::vector<std::pair<int, Integer>> values;
    for (int x : points) values.emplace_back(x, eval(f, Integer(x)));
    std::vector<std::pair<int, Integer>> nonzero;
    for (const auto& v : values) {
        if (!v.second.is_zero()) nonzero.push_back(v);
    }
    if (nonzero.size() < 2) throw std::invalid_argument("f vanishes at too many anchor points");
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [](const auto& a, const auto& b) { return abs(a.second) < abs(b.second); });
    out.anchors = {nonzero[0], nonzero[1]};

    const auto [x1, v1] = out.anchors[0];
    const auto [x2, v2] = out.anchors[1];
    const Integer s1(x1 * x1), s2(x2 * x2), dx(x1 - x2);
    for (const Integer& d1 : signed_divisors(v1)) {
        for (const Integer& d2 : signed_divisors(v2)) {
            // g(x) = x^2 + b x + c with g(x1) = d1, g(x2) = d2
            const Integer num = (d1 - s1) - (d2 - s2);
            if (!divides(dx, num)) continue;
            ++out.enumerated;
            const Integer b = ptk::divexact(num, dx);
            const Integer c = d1 - s1 - b * Integer(x1);
            const ZPoly g(kZ, {c, b, Integer(1)}, f.var());
            if (!(reduce_mod(g, p) == target.with_var(f.var()))) continue;
            const bool sieve = std::all_of(values.begin(), values.end(), [&](const auto& v) {
                return divides(eval(g, Integer(v.first)), v.second);
            });
            if (!sieve) continue;
            out.survivors.push_back(g);
            if (try_divide(f, g)) out.factors.push_back(g);
        }
    }
    return out;
}

Certificate no_qi_certificate(int n, std::uint64_t seed) {
    validate_negative_index(n);
    const Mod2Report mod2 = check_mod2_pattern(n, seed);
    Plan plan;
    plan.target = TargetField::QI;
    plan.name = name_of("q", n);
    plan.poly = gen_q(n);
    plan.prime = 2;
    plan.assumptions = {trace_field_assumption(plan.name), "2 ramifies in Q(i) (discriminant -4)"};
    plan.lemmas.push_back({"q_n - w q_n' = (w+1)^2 mod 2", mod2.derivative_identity});
    if (n % 3 != 0) {
        plan.case_tag = kCaseSquarefree;
        plan.lemmas.push_back({"w+1 does not divide q_n mod 2", mod2.e == 0});
    } else {
        plan.case_tag = kCaseUnramified;
        plan.lemmas.push_back({"(w+1)^2 exactly divides q_n mod 2", mod2.e == 2});
        plan.search_target = FpPoly::from_ints(PrimeField(2), {1, 0, 1}, "w");
    }
    return build(n, std::move(plan), seed);
}

Certificate no_qsqrt3_certificate(int n, std::uint64_t seed) {
    validate_negative_index(n);
    const Mod3Report mod3 = check_mod3_structure(n);
    Plan plan;
    plan.target = TargetField::QSqrtMinus3;
    plan.prime = 3;
    if (!mod3.three_divides) {
        plan.case_tag = kCaseSquarefree;
        plan.name = name_of("p", n);
        plan.poly = gen_p(n);
        const GIdentity g = check_g_identity(n);
        plan.lemmas.push_back({"g_n = " + std::string(g.sign < 0 ? "-" : "+") + "v p_n mod 3", g.holds});
        plan.lemmas.push_back({"gcd(g_n, g_n') = 1 mod 3", mod3.g_coprime.value_or(false)});
        plan.lemmas.push_back({"gcd(p_n, p_n') = 1 mod 3", mod3.p_squarefree_mod3.value_or(false)});
    } else {
        plan.name = name_of("q", n);
        plan.poly = gen_q(n);
        plan.lemmas.push_back({"q_n - (1-w) q_n' = -w mod 3", mod3.derivative_identity.value_or(false)});
        if (mod_floor(n, 4) == 3) {
            plan.case_tag = kCaseSquarefree;
            plan.lemmas.push_back({"w does not divide q_n mod 3", mod3.w_multiplicity == 0});
        } else {
            plan.case_tag = kCaseUnramified;
            plan.lemmas.push_back({"w^2 exactly divides q_n mod 3", mod3.w_multiplicity == 2});
            plan.search_target = FpPoly::from_ints(PrimeField(3), {0, 0, 1}, "w");
        }
    }
    plan.assumptions = {trace_field_assumption(plan.name), "3 ramifies in Q(sqrt(-3)) (discriminant -3)"};
    return build(n, std::move(plan), seed);
}

HiddenSymmetryVerdict hidden_symmetry_verdict(int n, std::uint64_t seed) {
    validate_negative_index(n);
    HiddenSymmetryVerdict out;
    out.n = n;
    out.qi = no_qi_certificate(n, seed);
    out.qsqrt3 = no_qsqrt3_certificate(n, seed);
    out.product_identity = check_product_identity(n).holds;
    out.no_hidden_symmetries = out.qi.verdict == Verdict::NotSubfield && out.qsqrt3.verdict == Verdict::NotSubfield;
    out.assumptions = {
        "the cusp field is a subfield of the trace field",
        "a knot complement with hidden symmetries has cusp field Q(i) or Q(sqrt(-3))",
        "k_n and k_(6-n) are generated by roots of factors of the same polynomial, so n >= 7 reduces to 6 - n",
    };
    return out;
}

std::vector<std::string> recheck(const Certificate& cert) {
    std::vector<std::string> problems;
    for (const auto& ev : cert.factors) {
        const std::string who = to_pretty(ev.factor);
        if (!try_divide(cert.polynomial, ev.factor)) problems.push_back(who + " does not divide " + cert.polynomial_name);
        if (!(ev.pattern.product(ev.factor.var()) == make_monic(reduce_mod(ev.factor, cert.prime)))) {
            problems.push_back("factor pattern of " + who + " does not multiply back");
        }
        if (ev.splitting && ev.splitting->degree() != ev.factor.degree()) {
            problems.push_back("splitting type of " + who + " has sum(e f) != degree");
        }
    }
    if (cert.quadratic_search) {
        for (const auto& g : cert.quadratic_search->factors) {
            if (!try_divide(cert.polynomial, g)) problems.push_back("reported quadratic factor does not divide");
        }
    }
    const bool any = std::any_of(cert.chains.begin(), cert.chains.end(), [](const ChainResult& c) { return c.complete; });
    if ((cert.verdict == Verdict::NotSubfield) != any) problems.push_back("verdict does not match the chains");
    return problems;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

ordered_json to_json(const ConjectureCheck& check) {
    ordered_json j;
    j["n"] = check.n;
    j["p_irreducible"] = check.p_irreducible;
    j["q_irreducible"] = check.q_irreducible;
    j["p_witness"] = to_json(check.p_witness);
    j["q_witness"] = to_json(check.q_witness);
    return j;
}

ordered_json to_json(const QuadraticSearch& search) {
    ordered_json j;
    j["prime"] = search.prime;
    j["target"] = to_json(search.target_lift);
    j["anchors"] = ordered_json::array();
    for (const auto& [x, v] : search.anchors) j["anchors"].push_back({{"x", x}, {"value", v.to_string()}});
    j["enumerated"] = search.enumerated;
    j["survivors"] = ordered_json::array();
    for (const auto& g : search.survivors) j["survivors"].push_back(to_json(g));
    j["factors"] = ordered_json::array();
    for (const auto& g : search.factors) j["factors"].push_back(to_json(g));
    return j;
}

QuadraticSearch quadratic_search_from_json(const ordered_json& j) {
    QuadraticSearch s;
    s.prime = j.at("prime").get<std::uint32_t>();
    s.target_lift = zpoly_from_json(j.at("target"));
    for (const auto& a : j.at("anchors")) {
        s.anchors.emplace_back(a.at("x").get<int>(), Integer::from_string(a.at("value").get<std::string>()));
    }
    s.enumerated = j.at("enumerated").get<long>();
    for (const auto& g : j.at("survivors")) s.survivors.push_back(zpoly_from_json(g));
    for (const auto& g : j.at("factors")) s.factors.push_back(zpoly_from_json(g));
    return s;
}

ordered_json to_json(const Certificate& cert) {
    ordered_json j;
    j["schema"] = kCertificateSchema;
    j["n"] = cert.n;
    j["target"] = to_string(cert.target);
    j["verdict"] = to_string(cert.verdict);
    j["case"] = cert.case_tag;

    ordered_json ev;
    ev["polynomial"] = {{"name", cert.polynomial_name}, {"value", to_json(cert.polynomial)}};
    ev["prime"] = cert.prime;
    ev["irreducibility"] = to_json(cert.irreducibility);
    ev["lemmas"] = ordered_json::array();
    for (const auto& l : cert.lemmas) ev["lemmas"].push_back({{"name", l.name}, {"holds", l.holds}});
    ev["factors"] = ordered_json::array();
    for (const auto& f : cert.factors) {
        ordered_json fj;
        fj["factor"] = to_json(f.factor);
        fj["pattern"] = to_json(f.pattern);
        fj["disc_valuation"] = f.disc_valuation;
        fj["splitting"] = f.splitting ? to_json(*f.splitting) : ordered_json(nullptr);
        if (!f.splitting_note.empty()) fj["splitting_note"] = f.splitting_note;
        fj["lemma_route"] = f.lemma_route;
        fj["direct_route"] = f.direct_route;
        ev["factors"].push_back(std::move(fj));
    }
    ev["quadratic_search"] = cert.quadratic_search ? to_json(*cert.quadratic_search) : ordered_json(nullptr);
    ev["chains"] = ordered_json::array();
    for (const auto& c : cert.chains) ev["chains"].push_back({{"name", c.name}, {"complete", c.complete}});
    j["evidence"] = std::move(ev);

    j["assumptions"] = cert.assumptions;
    return j;
}

Certificate certificate_from_json(const ordered_json& j) {
    if (j.at("schema").get<int>() != kCertificateSchema) throw std::invalid_argument("unsupported certificate schema");
    Certificate c;
    c.n = j.at("n").get<int>();
    const auto target = j.at("target").get<std::string>();
    if (target == "Q(i)") {
        c.target = TargetField::QI;
    } else if (target == "Q(sqrt(-3))") {
        c.target = TargetField::QSqrtMinus3;
    } else {
        throw std::invalid_argument("unknown target field: " + target);
    }
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "not_subfield" && verdict != "inconclusive") throw std::invalid_argument("unknown verdict: " + verdict);
    c.verdict = verdict == "not_subfield" ? Verdict::NotSubfield : Verdict::Inconclusive;
    c.case_tag = j.at("case").get<std::string>();

    const auto& ev = j.at("evidence");
    c.polynomial_name = ev.at("polynomial").at("name").get<std::string>();
    c.polynomial = zpoly_from_json(ev.at("polynomial").at("value"));
    c.prime = ev.at("prime").get<std::uint32_t>();
    c.irreducibility = irreducibility_witness_from_json(ev.at("irreducibility"));
    for (const auto& l : ev.at("lemmas")) c.lemmas.push_back({l.at("name").get<std::string>(), l.at("holds").get<bool>()});
    for (const auto& fj : ev.at("factors")) {
        FactorEvidence f;
        f.factor = zpoly_from_json(fj.at("factor"));
        f.pattern = factor_pattern_from_json(fj.at("pattern"));
        f.disc_valuation = fj.at("disc_valuation").get<int>();
        if (!fj.at("splitting").is_null()) f.splitting = splitting_type_from_json(fj.at("splitting"));
        if (fj.contains("splitting_note")) f.splitting_note = fj.at("splitting_note").get<std::string>();
        f.lemma_route = fj.at("lemma_route").get<bool>();
        f.direct_route = fj.at("direct_route").get<bool>();
        c.factors.push_back(std::move(f));
    }
    if (!ev.at("quadratic_search").is_null()) c.quadratic_search = quadratic_search_from_json(ev.at("quadratic_search"));
    for (const auto& ch : ev.at("chains")) c.chains.push_back({ch.at("name").get<std::string>(), ch.at("complete").get<bool>()});
    c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    return c;
}

ordered_json to_json(const HiddenSymmetryVerdict& verdict) {
    ordered_json j;
    j["schema"] = kCertificateSchema;
    j["n"] = verdict.n;
    j["verdict"] = verdict.no_hidden_symmetries ? "no_hidden_symmetries" : "inconclusive";
    j["product_identity"] = verdict.product_identity;
    j["certificates"] = {to_json(verdict.qi), to_json(verdict.qsqrt3)};
    j["assumptions"] = verdict.assumptions;
    return j;
}

}  // namespace ptk
