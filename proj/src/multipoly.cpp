#include "ptk/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptk {

// ---------------------------------------------------------------------------
// Variables and ordering
// ---------------------------------------------------------------------------

VariableSet::VariableSet(std::vector<std::string> names_in, const std::vector<std::string>& laurent_names)
    : names(std::move(names_in)), laurent(names.size(), false) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw std::invalid_argument("empty variable name");
        for (std::size_t j = 0; j < i; ++j) {
            if (names[i] == names[j]) throw std::invalid_argument("duplicate variable " + names[i]);
        }
    }
    for (const auto& l : laurent_names) laurent[static_cast<std::size_t>(index(l))] = true;
}

int VariableSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

int VariableSet::index(std::string_view name) const {
    const int i = find(name);
    if (i < 0) throw std::invalid_argument("unknown variable " + std::string(name));
    return i;
}

VariableSet standard_variables() { return VariableSet({"u", "v", "w"}); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

// ---------------------------------------------------------------------------
// MultiPolynomial
// ---------------------------------------------------------------------------

MultiPolynomial MultiPolynomial::constant(const VariableSet& vars, const Rational& c) {
    return monomial(vars, c, Exponents(static_cast<std::size_t>(vars.size()), 0));
}

MultiPolynomial MultiPolynomial::variable(const VariableSet& vars, std::string_view name, int power) {
    Exponents e(static_cast<std::size_t>(vars.size()), 0);
    e[static_cast<std::size_t>(vars.index(name))] = power;
    return monomial(vars, Rational(1), std::move(e));
}

MultiPolynomial MultiPolynomial::monomial(const VariableSet& vars, const Rational& c, Exponents e) {
    MultiPolynomial out(vars);
    if (e.size() != vars.names.size()) throw std::invalid_argument("exponent vector has the wrong length");
    out.check_exponents(e);
    out.add_term(e, c);
    return out;
}

void MultiPolynomial::check_exponents(const Exponents& e) const {
    for (int i = 0; i < vars_.size(); ++i) {
        if (e[static_cast<std::size_t>(i)] < 0 && !vars_.is_laurent(i)) {
            throw std::domain_error("negative exponent of non-Laurent variable " + vars_.names[static_cast<std::size_t>(i)]);
        }
    }
}

void MultiPolynomial::require_same_vars(const MultiPolynomial& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("multivariate operands over different variable sets");
}

void MultiPolynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool MultiPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int MultiPolynomial::max_degree(int i) const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first[static_cast<std::size_t>(i)];
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<std::size_t>(i)]);
    return m;
}

int MultiPolynomial::min_degree(int i) const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first[static_cast<std::size_t>(i)];
    for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<std::size_t>(i)]);
    return m;
}

bool MultiPolynomial::involves(int i) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [i](const auto& t) { return t.first[static_cast<std::size_t>(i)] != 0; });
}

const std::pair<const Exponents, Rational>& MultiPolynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return *terms_.begin();
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    a.require_same_vars(b);
    MultiPolynomial out(a.vars_);
    const std::size_t n = a.vars_.names.size();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPolynomial operator-(const MultiPolynomial& a) {
    MultiPolynomial out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPolynomial MultiPolynomial::scale(const Rational& c) const {
    MultiPolynomial out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
    return out;
}

MultiPolynomial MultiPolynomial::shift(const Exponents& s) const {
    MultiPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
        out.check_exponents(f);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

std::map<int, MultiPolynomial> MultiPolynomial::collect(int i) const {
    std::map<int, MultiPolynomial> out;
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(i)];
        Exponents f = e;
        f[static_cast<std::size_t>(i)] = 0;
        auto it = out.try_emplace(k, vars_).first;
        it->second.add_term(f, c);
    }
    return out;
}

MultiPolynomial MultiPolynomial::substitute(std::string_view var, const MultiPolynomial& value) const {
    require_same_vars(value);
    const int i = vars_.index(var);
    const auto parts = collect(i);
    MultiPolynomial out(vars_);
    if (parts.empty()) return out;
    std::optional<MultiPolynomial> inverse;
    if (parts.begin()->first < 0) {
        if (value.size() != 1) throw std::domain_error("negative power of a non-monomial substitution value");
        const auto& [e, c] = value.leading_term();
        Exponents neg = e;
        for (auto& x : neg) x = -x;
        inverse = monomial(vars_, Rational(1) / c, neg);
    }
    std::map<int, MultiPolynomial> powers;
    powers.emplace(0, constant(vars_, Rational(1)));
    for (int k = 1; k <= parts.rbegin()->first; ++k) powers.emplace(k, powers.at(k - 1) * value);
    for (int k = -1; k >= parts.begin()->first; --k) powers.emplace(k, powers.at(k + 1) * *inverse);
    for (const auto& [k, coeff] : parts) out += coeff * powers.at(k);
    return out;
}

MultiPolynomial MultiPolynomial::substitute_fraction(std::string_view var, const MultiPolynomial& num,
                                                     const MultiPolynomial& den) const {
    require_same_vars(num);
    require_same_vars(den);
    if (den.is_zero()) throw std::domain_error("zero denominator in substitution");
    const int i = vars_.index(var);
    if (!involves(i)) return *this;
    const auto parts = collect(i);
    const int top = std::max(parts.rbegin()->first, 0);
    const int bottom = std::min(parts.begin()->first, 0);
    // var^k -> num^(k - bottom) * den^(top - k)
    std::vector<MultiPolynomial> num_pow{constant(vars_, Rational(1))};
    std::vector<MultiPolynomial> den_pow{constant(vars_, Rational(1))};
    for (int k = 1; k <= top - bottom; ++k) {
        num_pow.push_back(num_pow.back() * num);
        den_pow.push_back(den_pow.back() * den);
    }
    MultiPolynomial out(vars_);
    for (const auto& [k, coeff] : parts) {
        out += coeff * num_pow[static_cast<std::size_t>(k - bottom)] * den_pow[static_cast<std::size_t>(top - k)];
    }
    return out;
}

MultiPolynomial MultiPolynomial::normalized() const {
    if (terms_.empty()) return *this;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, c.numerator());
        den_lcm = lcm(den_lcm, c.denominator());
    }
    Rational factor(den_lcm, num_gcd);
    if (terms_.begin()->second.sign() < 0) factor = -factor;
    Exponents s(static_cast<std::size_t>(vars_.size()), 0);
    for (int i = 0; i < vars_.size(); ++i) {
        if (vars_.is_laurent(i)) s[static_cast<std::size_t>(i)] = -min_degree(i);
    }
    return scale(factor).shift(s);
}

QPoly MultiPolynomial::to_univariate(std::string_view var) const {
    const int i = vars_.index(var);
    const RationalField Q{};
    if (terms_.empty()) return QPoly(Q, std::string(var));
    std::vector<Rational> cs(static_cast<std::size_t>(std::max(max_degree(i), 0)) + 1, Rational(0));
    for (const auto& [e, c] : terms_) {
        for (int j = 0; j < vars_.size(); ++j) {
            if (j != i && e[static_cast<std::size_t>(j)] != 0) {
                throw std::domain_error("polynomial is not univariate in " + std::string(var));
            }
        }
        const int k = e[static_cast<std::size_t>(i)];
        if (k < 0) throw std::domain_error("negative exponent in univariate view");
        cs[static_cast<std::size_t>(k)] = c;
    }
    return QPoly(Q, std::move(cs), std::string(var));
}

ZPoly MultiPolynomial::to_integer_univariate(std::string_view var) const {
    const QPoly q = to_univariate(var);
    const IntegerRing Z{};
    return map_coeffs(q, Z, [](const Rational& c) {
        if (!c.is_integer()) throw std::domain_error("non-integer coefficient");
        return c.numerator();
    });
}

std::string MultiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string f = vars_.names[i];
            if (e[i] != 1) f += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
            factors.push_back(std::move(f));
        }
        const bool unit = mag == Rational(1);
        if (!unit || factors.empty()) {
            os << mag.to_string();
            if (!factors.empty()) os << "*";
        }
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

MultiPolynomial pow(const MultiPolynomial& base, unsigned k) {
    MultiPolynomial result = MultiPolynomial::constant(base.vars(), Rational(1));
    MultiPolynomial b = base;
    while (k > 0) {
        if (k & 1U) result = result * b;
        k >>= 1U;
        if (k > 0) b = b * b;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const VariableSet& vars) : text_(text), vars_(vars) {}

    RationalExpression parse() {
        RationalExpression e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RationalExpression one() const {
        return {MultiPolynomial::constant(vars_, Rational(1)), MultiPolynomial::constant(vars_, Rational(1))};
    }

    static RationalExpression add(const RationalExpression& x, const RationalExpression& y, bool subtract) {
        const MultiPolynomial ny = subtract ? -y.num : y.num;
        if (x.den == y.den) return {x.num + ny, x.den};
        return {x.num * y.den + ny * x.den, x.den * y.den};
    }

    static RationalExpression mul(const RationalExpression& x, const RationalExpression& y) {
        return {x.num * y.num, x.den * y.den};
    }

    RationalExpression divide(const RationalExpression& x, const RationalExpression& y) const {
        if (y.num.is_zero()) fail("division by zero");
        return {x.num * y.den, x.den * y.num};
    }

    RationalExpression expr() {
        RationalExpression acc = term();
        while (true) {
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            acc = add(acc, term(), c == '-');
        }
    }

    bool starts_factor(char c) const {
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
    }

    RationalExpression term() {
        RationalExpression acc = unary();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = mul(acc, unary());
            } else if (c == '/') {
                ++pos_;
                acc = divide(acc, unary());
            } else if (starts_factor(c)) {
                acc = mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    RationalExpression unary() {
        const char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            RationalExpression e = unary();
            if (c == '-') e.num = -e.num;
            return e;
        }
        return power();
    }

    RationalExpression power() {
        RationalExpression base = primary();
        if (peek() != '^') return base;
        ++pos_;
        bool negative = false;
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
        }
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        const unsigned k = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
        if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        if (negative) {
            if (base.num.is_zero()) fail("negative power of zero");
            std::swap(base.num, base.den);
        }
        return {pow(base.num, k), pow(base.den, k)};
    }

    RationalExpression primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RationalExpression e = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const Integer value = Integer::from_string(text_.substr(start, pos_ - start));
            return {MultiPolynomial::constant(vars_, Rational(value)), one().den};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // Longest variable name matching here, so "uv" reads as u*v.
            int best = -1;
            std::size_t best_len = 0;
            for (int i = 0; i < vars_.size(); ++i) {
                const auto& name = vars_.names[static_cast<std::size_t>(i)];
                if (text_.substr(pos_, name.size()) == name && name.size() > best_len) {
                    best = i;
                    best_len = name.size();
                }
            }
            if (best < 0) fail("unknown variable");
            pos_ += best_len;
            return {MultiPolynomial::variable(vars_, vars_.names[static_cast<std::size_t>(best)]), one().den};
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    const VariableSet& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalExpression parse_expression(std::string_view text, const VariableSet& vars) {
    return ExpressionParser(text, vars).parse();
}

MultiPolynomial parse_polynomial(std::string_view text, const VariableSet& vars) {
    RationalExpression e = parse_expression(text, vars);
    // A monomial denominator is invertible when it only involves Laurent variables.
    if (e.den.size() != 1) throw std::invalid_argument("expression is not a polynomial");
    const auto& [exps, c] = e.den.leading_term();
    Exponents inverse(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] != 0 && !vars.is_laurent(static_cast<int>(i))) throw std::invalid_argument("expression is not a polynomial");
        inverse[i] = -exps[i];
    }
    return e.num.scale(Rational(1) / c).shift(inverse);
}

// ---------------------------------------------------------------------------
// Mat2
// ---------------------------------------------------------------------------

Mat2 Mat2::identity(const VariableSet& vars) {
    const auto one = MultiPolynomial::constant(vars, Rational(1));
    const MultiPolynomial zero(vars);
    return {one, zero, zero, one};
}

const MultiPolynomial& Mat2::entry(int i) const {
    switch (i) {
        case 0: return a;
        case 1: return b;
        case 2: return c;
        case 3: return d;
        default: throw std::out_of_range("matrix entry index");
    }
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 Mat2::substitute(std::string_view var, const MultiPolynomial& value) const {
    return {a.substitute(var, value), b.substitute(var, value), c.substitute(var, value), d.substitute(var, value)};
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

ordered_json to_json(const MultiPolynomial& f) {
    ordered_json j;
    j["vars"] = f.vars().names;
    std::vector<std::string> laurent;
    for (int i = 0; i < f.vars().size(); ++i) {
        if (f.vars().is_laurent(i)) laurent.push_back(f.vars().names[static_cast<std::size_t>(i)]);
    }
    j["laurent"] = laurent;
    j["terms"] = ordered_json::array();
    for (const auto& [e, c] : f.terms()) j["terms"].push_back({{"exp", e}, {"coeff", c.to_string()}});
    return j;
}

MultiPolynomial multipoly_from_json(const ordered_json& j) {
    const VariableSet vars(j.at("vars").get<std::vector<std::string>>(),
                           j.at("laurent").get<std::vector<std::string>>());
    MultiPolynomial out(vars);
    for (const auto& t : j.at("terms")) {
        const Rational c = Rational::from_string(t.at("coeff").get<std::string>());
        if (c.is_zero()) throw std::invalid_argument("zero coefficient in multivariate polynomial");
        out += MultiPolynomial::monomial(vars, c, t.at("exp").get<Exponents>());
    }
    return out;
}

}  // namespace ptk
