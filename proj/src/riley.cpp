#include "ptk/riley.hpp"

#include <cctype>
#include <cstdlib>

namespace ptk {

PresentationError::PresentationError(std::size_t position, const std::string& what)
    : std::invalid_argument("presentation syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

GroupWord::GroupWord(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) {
        if (l.exponent == 0) continue;
        if (!letters_.empty() && letters_.back().generator == l.generator) {
            letters_.back().exponent += l.exponent;
            if (letters_.back().exponent == 0) letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

int GroupWord::length() const {
    int n = 0;
    for (const auto& l : letters_) n += std::abs(l.exponent);
    return n;
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exponent = -l.exponent;
    return GroupWord(out);
}

GroupWord GroupWord::power(int k) const {
    const GroupWord base = k < 0 ? inverse() : *this;
    GroupWord out;
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<Letter> all = a.letters_;
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return GroupWord(all);
}

std::string GroupWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& l : letters_) {
        out += l.generator;
        if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
}

namespace {

class WordParser {
public:
    explicit WordParser(std::string_view text) : text_(text) {}

    Presentation presentation() {
        Presentation out;
        while (true) {
            skip_blank_and_separators();
            if (at_end()) break;
            GroupWord lhs = word();
            if (peek() != '=') fail("expected '='");
            ++pos_;
            GroupWord rhs = word();
            out.relations.push_back({std::move(lhs), std::move(rhs)});
            const char c = peek();
            if (c != '\0' && c != ';' && c != '\n') fail("expected end of relation");
        }
        if (out.relations.empty()) fail("no relations");
        return out;
    }

    GroupWord single_word() {
        GroupWord w = word();
        if (!at_end()) fail("unexpected character");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw PresentationError(pos_, what); }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }

    void skip_blank_and_separators() {
        while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ';')) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    GroupWord word() {
        GroupWord out;
        while (true) {
            const char c = peek();
            if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                GroupWord atom_word = atom();
                out = out * atom_word.power(exponent());
            } else {
                return out;
            }
        }
    }

    GroupWord atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            GroupWord inner = word();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lower != 'f' && lower != 'g' && lower != 'h') fail(std::string("unknown generator '") + c + "'");
        ++pos_;
        return GroupWord({{lower, std::isupper(static_cast<unsigned char>(c)) ? -1 : 1}});
    }

    int exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
        }
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        const int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        return sign * k;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return WordParser(text).presentation(); }

GroupWord parse_word(std::string_view text) { return WordParser(text).single_word(); }

std::string family_presentation(int n) {
    validate_family_index(n);
    const int m = (n - 1) / 2;
    const std::string power = "^(" + std::to_string(m) + ")";
    return "hfhg = fhgf; gf(hg)" + power + " = f(hg)" + power + "h";
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

Parametrization parse_parametrization(std::string_view name) {
    if (name == "standard") return Parametrization::Standard;
    if (name == "inverted_v") return Parametrization::InvertedV;
    throw std::invalid_argument("unknown parametrization: " + std::string(name));
}

std::string to_string(Parametrization p) { return p == Parametrization::Standard ? "standard" : "inverted_v"; }

VariableSet parametrization_variables(Parametrization p) {
    if (p == Parametrization::Standard) return standard_variables();
    return VariableSet({"u", "v", "w"}, {"v"});
}

const Mat2& GeneratorImages::of(char generator) const {
    switch (generator) {
        case 'f': return f;
        case 'g': return g;
        case 'h': return h;
        default: throw std::invalid_argument(std::string("unknown generator '") + generator + "'");
    }
}

GeneratorImages generator_matrices(Parametrization p) { return generator_matrices(p, parametrization_variables(p)); }

GeneratorImages generator_matrices(Parametrization p, const VariableSet& vars) {
    auto e = [&](std::string_view text) { return parse_polynomial(text, vars); };
    GeneratorImages out;
    out.h = {e("1"), e("-1"), e("0"), e("1")};
    if (p == Parametrization::Standard) {
        out.f = {e("1 - u*v"), e("-v^2"), e("u^2"), e("1 + u*v")};
        out.g = {e("1"), e("0"), e("w"), e("1")};
    } else {
        const auto u_over_v = MultiPolynomial::variable(vars, "u") * MultiPolynomial::variable(vars, "v", -1);
        out.f = {e("1 - u"), -u_over_v, e("u*v"), e("1 + u")};
        out.g = {e("1"), e("0"), e("w^2"), e("1")};
    }
    return out;
}

Mat2 eval_word(const GeneratorImages& images, const GroupWord& word) {
    Mat2 out = Mat2::identity(images.h.a.vars());
    for (const auto& l : word.letters()) {
        const Mat2 m = l.exponent > 0 ? images.of(l.generator) : images.of(l.generator).adjugate();
        for (int i = 0; i < std::abs(l.exponent); ++i) out = out * m;
    }
    return out;
}

Mat2 relation_residue(const GeneratorImages& images, const Relation& relation) {
    return eval_word(images, relation.lhs) - eval_word(images, relation.rhs);
}

// ---------------------------------------------------------------------------
// Substitution chains
// ---------------------------------------------------------------------------

SubstitutionChain parse_chain(std::string_view text, const VariableSet& vars) {
    SubstitutionChain chain;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find_first_of(";\n", start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view step = text.substr(start, end - start);
        start = end + 1;
        if (step.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        const std::size_t eq = step.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("substitution step without '='");
        std::string var(step.substr(0, eq));
        var.erase(0, var.find_first_not_of(" \t\r"));
        var.erase(var.find_last_not_of(" \t\r") + 1);
        vars.index(var);
        RationalExpression value = parse_expression(step.substr(eq + 1), vars);
        if (value.num.involves(vars.index(var)) || value.den.involves(vars.index(var))) {
            throw std::invalid_argument("substitution for " + var + " refers to " + var);
        }
        chain.push_back({std::move(var), std::move(value.num), std::move(value.den)});
    }
    return chain;
}

MultiPolynomial apply_substitution_chain(const MultiPolynomial& poly, const SubstitutionChain& chain) {
    MultiPolynomial out = poly;
    for (const auto& step : chain) {
        if (step.den.is_zero()) throw std::domain_error("zero denominator in substitution for " + step.var);
        out = out.substitute_fraction(step.var, step.num, step.den);
    }
    return out.normalized();
}

namespace {

SubstitutionChain tail(const SubstitutionChain& chain, std::size_t from) {
    return SubstitutionChain(chain.begin() + static_cast<std::ptrdiff_t>(from), chain.end());
}

ZPoly univariate(const MultiPolynomial& f, const std::string& var) {
    for (int i = 0; i < f.vars().size(); ++i) {
        if (f.vars().names[static_cast<std::size_t>(i)] != var && f.involves(i)) {
            throw std::invalid_argument("substitution chain leaves " + f.vars().names[static_cast<std::size_t>(i)] +
                                        " in a relation entry");
        }
    }
    return f.to_integer_univariate(var);
}

/// Removes every factor g shares with s.
ZPoly strip_common(ZPoly g, const ZPoly& s, std::vector<ZPoly>& stripped) {
    if (s.degree() < 1) return g;
    while (true) {
        const ZPoly d = gcd(g, s);
        if (d.degree() < 1) return g;
        g = divexact(g, d);
        stripped.push_back(d);
    }
}

}  // namespace

RileyDerivation derive_riley(const Presentation& presentation, Parametrization p, const SubstitutionChain& chain,
                             const std::string& variable) {
    if (presentation.relations.empty()) throw std::invalid_argument("presentation without relations");
    const GeneratorImages images = generator_matrices(p);
    const VariableSet& vars = images.h.a.vars();
    vars.index(variable);

    RileyDerivation out;
    out.variable = variable;

    // Side polynomials: each step's numerator and denominator pushed through the later steps.
    std::vector<ZPoly> numerators;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const SubstitutionChain rest = tail(chain, i + 1);
        const MultiPolynomial den = apply_substitution_chain(chain[i].den, rest);
        if (den.is_zero()) {
            throw DegenerateSubstitution("denominator of the substitution for " + chain[i].var +
                                         " vanishes after the later steps");
        }
        out.side_polynomials.push_back(univariate(den, variable));
        numerators.push_back(univariate(apply_substitution_chain(chain[i].num, rest), variable));
    }

    out.first_relations_vanish = true;
    for (std::size_t r = 0; r + 1 < presentation.relations.size(); ++r) {
        const Mat2 res = relation_residue(images, presentation.relations[r]);
        for (int i = 0; i < 4; ++i) {
            if (!apply_substitution_chain(res.entry(i), chain).is_zero()) out.first_relations_vanish = false;
        }
    }

    const Mat2 last = relation_residue(images, presentation.relations.back());
    for (int i = 0; i < 4; ++i) {
        const MultiPolynomial e = apply_substitution_chain(last.entry(i), chain);
        if (!e.is_zero()) out.entry_numerators.push_back(univariate(e, variable));
    }
    if (out.entry_numerators.empty()) throw DegenerateSubstitution("last relation holds identically after the chain");

    ZPoly g = out.entry_numerators.front();
    for (const auto& e : out.entry_numerators) g = gcd(g, e);
    out.common = g;

    g = strip_common(g, ZPoly::variable(IntegerRing{}, variable), out.stripped);
    for (const auto& s : out.side_polynomials) g = strip_common(g, s, out.stripped);
    for (const auto& s : numerators) g = strip_common(g, s, out.stripped);
    out.polynomial = primitive_part(g);
    if (out.polynomial.degree() < 1) throw DegenerateSubstitution("no polynomial left after removing side factors");

    out.side_conditions = true;
    for (const auto& s : out.side_polynomials) {
        if (gcd(out.polynomial, s).degree() >= 1) out.side_conditions = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Built-in knots
// ---------------------------------------------------------------------------

const std::vector<KnotData>& builtin_knots() {
    static const std::vector<KnotData> knots = {
        {"2,3,5",
         "hfhfG = fhfGf; gFghghg = Fghghgh",
         Parametrization::Standard,
         "w = u*(1-u^2) / (v*(u^2-1+u*v*(u^2-2))); v = (u-1)/(1+u-u^2)",
         "u",
         {1, -2, -11, -8, 50, 56, -40, -114, -17, 104, 47, -46, -41, 14, 18, -5, -3, 1}},
        {"2,3,-5",
         "hfhfG = fhfGf; hghghf = ghghfg",
         Parametrization::Standard,
         "w = u*(1-u^2) / (v*(u^2-1+u*v*(u^2-2))); v = (u-1)/(1+u-u^2)",
         "u",
         {1, -7, -1, 21, 13, -19, -18, 7, 12, -3, -3, 1}},
        {"-3,3,4",
         "GFgfg = HFhfh; HfhfhGh = fhGhGhg",
         Parametrization::InvertedV,
         "u = v*(v^2+w^2) / (w^4+v*w^2-v^3+v^4); v = w*(w+1)/(w-1)",
         "w",
         {2, 4, 2, 12, -3, 7, -1, 1}},
    };
    return knots;
}

const KnotData& knot_data(std::string_view name) {
    for (const auto& k : builtin_knots()) {
        if (k.name == name) return k;
    }
    throw std::invalid_argument("unknown knot: " + std::string(name));
}

RileyResult riley_polynomial(std::string_view knot, std::uint64_t seed) {
    const KnotData& data = knot_data(knot);
    RileyResult out;
    out.knot = data.name;
    const VariableSet vars = parametrization_variables(data.parametrization);
    out.derivation = derive_riley(parse_presentation(data.presentation), data.parametrization,
                                  parse_chain(data.chain, vars), data.variable);
    out.reference = ZPoly::from_ints(IntegerRing{}, data.reference, data.variable);
    out.matches = out.derivation.polynomial == out.reference || out.derivation.polynomial == -out.reference;
    if (!out.matches) {
        throw RileyMismatch("derived polynomial " + to_pretty(out.derivation.polynomial) + " for " + data.name +
                            " differs from " + to_pretty(out.reference));
    }
    out.irreducibility = irreducible_over_Q(out.derivation.polynomial, seed);
    return out;
}

// ---------------------------------------------------------------------------
// (-2,3,n) family
// ---------------------------------------------------------------------------

bool FamilyResidueReport::ok() const {
    bool any = false;
    for (const auto& e : entries) {
        if (e.zero) continue;
        any = true;
        if (!e.divisible) return false;
    }
    return any;
}

FamilyResidueReport family_residue_check(int n, int bound) {
    validate_family_index(n);
    if (std::abs(n) > bound) throw std::invalid_argument("|n| exceeds the configured bound " + std::to_string(bound));
    const VariableSet vars({"u", "v", "w"}, {"v"});
    GeneratorImages images = generator_matrices(Parametrization::Standard, vars);
    const MultiPolynomial u_value = parse_polynomial("v + 1", vars);
    const MultiPolynomial w_value = parse_polynomial("(v+1)*(v+2)/v", vars);
    for (Mat2* m : {&images.f, &images.g, &images.h}) *m = m->substitute("u", u_value).substitute("w", w_value);

    const Presentation pres = parse_presentation(family_presentation(n));
    FamilyResidueReport out;
    out.n = n;
    out.first_relation_zero = relation_residue(images, pres.relations[0]).is_zero();

    const ZPoly pn = gen_p(n);
    const Mat2 res = relation_residue(images, pres.relations[1]);
    for (int i = 0; i < 4; ++i) {
        FamilyEntry e;
        e.index = i;
        const MultiPolynomial& entry = res.entry(i);
        e.zero = entry.is_zero();
        if (!e.zero) {
            e.numerator = normalize_sign(entry.shift({0, -entry.min_degree(1), 0}).to_integer_univariate("v"));
            const auto q = try_divide(e.numerator, pn);
            e.divisible = q.has_value();
            e.cofactor_coprime = e.divisible && gcd(*q, pn).degree() == 0;
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

ordered_json to_json(const GroupWord& word) {
    ordered_json j = ordered_json::array();
    for (const auto& l : word.letters()) j.push_back({std::string(1, l.generator), l.exponent});
    return j;
}

ordered_json to_json(const RileyDerivation& d) {
    ordered_json j;
    j["variable"] = d.variable;
    j["first_relations_vanish"] = d.first_relations_vanish;
    j["entry_degrees"] = ordered_json::array();
    for (const auto& e : d.entry_numerators) j["entry_degrees"].push_back(e.degree());
    j["stripped"] = ordered_json::array();
    for (const auto& s : d.stripped) j["stripped"].push_back(to_json(s));
    j["side_conditions"] = d.side_conditions;
    j["polynomial"] = to_json(d.polynomial);
    return j;
}

ordered_json to_json(const RileyResult& r) {
    ordered_json j;
    j["knot"] = r.knot;
    j["degree"] = r.derivation.polynomial.degree();
    j["matches"] = r.matches;
    j["irreducible"] = r.irreducibility.irreducible;
    j["irreducibility"] = to_json(r.irreducibility);
    j["derivation"] = to_json(r.derivation);
    return j;
}

ordered_json to_json(const FamilyResidueReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["ok"] = report.ok();
    j["first_relation_zero"] = report.first_relation_zero;
    j["entries"] = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json ej;
        ej["index"] = e.index;
        ej["zero"] = e.zero;
        if (!e.zero) {
            ej["divisible"] = e.divisible;
            ej["cofactor_coprime"] = e.cofactor_coprime;
            ej["degree"] = e.numerator.degree();
        }
        j["entries"].push_back(std::move(ej));
    }
    return j;
}

}  // namespace ptk
