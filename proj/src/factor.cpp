#include "ptk/factor.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <sstream>

namespace ptk {

namespace {

const IntegerRing kZ{};

FpPoly fp_one(const PrimeField& field, const std::string& var) {
    return FpPoly::constant(field, field.one(), var);
}

FpPoly fp_x(const PrimeField& field, const std::string& var) { return FpPoly::variable(field, var); }

/// g with g^p = f for f whose derivative vanishes: keep the coefficients at multiples of p.
FpPoly pth_root(const FpPoly& f) {
    const std::uint32_t p = f.ring().modulus();
    std::vector<Residue> out;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) out.push_back(f.coeffs()[static_cast<std::size_t>(i)]);
    return FpPoly(f.ring(), std::move(out), f.var());
}

std::vector<std::uint32_t> small_primes(std::uint32_t bound) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = 2; n <= bound; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

bool divisible_by(const Integer& a, std::uint32_t p) { return divides(Integer(static_cast<long>(p)), a); }

ZPoly symmetric_mod(const ZPoly& f, const Integer& m) {
    return map_coeffs(f, kZ, [&](const Integer& c) { return mod_symmetric(c, m); });
}

ZPoly nonnegative_mod(const ZPoly& f, const Integer& m) {
    return map_coeffs(f, kZ, [&](const Integer& c) { return mod(c, m); });
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

constexpr std::size_t kMaxDegree = 1024;
using DegreeSet = std::bitset<kMaxDegree + 1>;

/// Degrees reachable as sums of sub-multisets of the factor degrees.
DegreeSet subset_sums(const std::vector<int>& degrees) {
    DegreeSet s;
    s.set(0);
    for (int d : degrees) s |= (s << static_cast<std::size_t>(d));
    return s;
}

std::vector<int> factor_degrees(const std::vector<std::pair<FpPoly, int>>& ddf) {
    std::vector<int> out;
    for (const auto& [g, d] : ddf) {
        for (int k = 0; k < g.degree() / d; ++k) out.push_back(d);
    }
    return out;
}

bool only_trivial(const DegreeSet& s, int n) {
    for (int d = 1; d < n; ++d) {
        if (s.test(static_cast<std::size_t>(d))) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

bool canonical_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto x = a.coeffs()[static_cast<std::size_t>(i)].value;
        const auto y = b.coeffs()[static_cast<std::size_t>(i)].value;
        if (x != y) return x < y;
    }
    return false;
}

FpPoly FactorPattern::product(const std::string& var) const {
    FpPoly acc = fp_one(PrimeField(prime), var);
    for (const auto& fp : factors) acc = acc * pow(fp.factor, static_cast<unsigned>(fp.multiplicity));
    return acc.with_var(var);
}

int FactorPattern::multiplicity_of(const FpPoly& g) const {
    for (const auto& fp : factors) {
        if (fp.factor == g) return fp.multiplicity;
    }
    return 0;
}

bool FactorPattern::is_squarefree() const {
    return std::all_of(factors.begin(), factors.end(), [](const FactorPower& f) { return f.multiplicity == 1; });
}

int SplittingType::degree() const {
    int s = 0;
    for (const auto& en : entries) s += en.e * en.f;
    return s;
}

bool SplittingType::is_unramified() const {
    return std::all_of(entries.begin(), entries.end(), [](const SplittingEntry& en) { return en.e == 1; });
}

// ---------------------------------------------------------------------------
// F_p
// ---------------------------------------------------------------------------

std::vector<FactorPower> squarefree_decomposition(const FpPoly& input) {
    if (input.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    const FpPoly f = make_monic(input);
    std::map<int, FpPoly> parts;
    auto add_part = [&](const FpPoly& g, int m) {
        if (g.degree() < 1) return;
        auto it = parts.find(m);
        if (it == parts.end()) parts.emplace(m, g);
        else it->second = it->second * g;
    };
    if (f.degree() >= 1) {
        FpPoly c = gcd(f, derivative(f));
        FpPoly w = divexact(f, c);
        int i = 1;
        while (w.degree() >= 1) {
            FpPoly y = gcd(w, c);
            add_part(divexact(w, y), i);
            w = y;
            c = divexact(c, y);
            ++i;
        }
        if (c.degree() >= 1) {
            const int p = static_cast<int>(f.ring().modulus());
            for (const auto& part : squarefree_decomposition(pth_root(c))) add_part(part.factor, part.multiplicity * p);
        }
    }
    std::vector<FactorPower> out;
    for (auto& [m, g] : parts) out.push_back({make_monic(g).with_var(input.var()), m});
    return out;
}

std::vector<std::pair<FpPoly, int>> distinct_degree_factorization(const FpPoly& input) {
    const PrimeField& field = input.ring();
    FpPoly f = make_monic(input);
    const FpPoly x = fp_x(field, f.var());
    const Integer p(static_cast<long>(field.modulus()));
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly h = rem(x, f);
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, p, f);
        FpPoly g = gcd(h - x, f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = divexact(f, g);
            h = rem(h, f);
        }
    }
    if (f.degree() >= 1) out.emplace_back(f, f.degree());
    return out;
}

std::vector<FpPoly> equal_degree_factorization(const FpPoly& input, int d, std::mt19937_64& rng) {
    const FpPoly f = make_monic(input);
    if (f.degree() == d) return {f};
    if (d < 1 || f.degree() % d != 0) throw std::invalid_argument("degree is not a multiple of the factor degree");
    const PrimeField& field = f.ring();
    const std::uint32_t p = field.modulus();
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    // (p^d - 1)/2 for odd p; the trace map a + a^2 + ... + a^(2^(d-1)) for p = 2.
    const Integer half = p == 2 ? Integer(0) : divexact(pow(Integer(static_cast<long>(p)), static_cast<unsigned long>(d)) - Integer(1), Integer(2));
    while (true) {
        std::vector<Residue> cs(static_cast<std::size_t>(f.degree()));
        for (auto& c : cs) c = {coeff(rng)};
        FpPoly a(field, std::move(cs), f.var());
        if (a.degree() < 1) continue;
        FpPoly b(field, f.var());
        if (p == 2) {
            FpPoly term = a;
            b = a;
            for (int i = 1; i < d; ++i) {
                term = mulmod(term, term, f);
                b = b + term;
            }
        } else {
            b = powmod(a, half, f) - fp_one(field, f.var());
        }
        FpPoly g = gcd(b, f);
        if (g.degree() >= 1 && g.degree() < f.degree()) {
            auto left = equal_degree_factorization(g, d, rng);
            auto right = equal_degree_factorization(divexact(f, g), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

FactorPattern factor_modp(const FpPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
    std::mt19937_64 rng(seed);
    FactorPattern out;
    out.prime = f.ring().modulus();
    for (const auto& part : squarefree_decomposition(f)) {
        for (const auto& [g, d] : distinct_degree_factorization(part.factor)) {
            for (auto& h : equal_degree_factorization(g, d, rng)) out.factors.push_back({h, part.multiplicity});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
    return out;
}

bool irreducible_modp(const FpPoly& input) {
    if (input.degree() < 1) throw std::domain_error("irreducibility needs degree >= 1");
    const FpPoly f = make_monic(input);
    const int n = f.degree();
    if (n == 1) return true;
    const PrimeField& field = f.ring();
    const FpPoly x = fp_x(field, f.var());
    const Integer p(static_cast<long>(field.modulus()));
    auto frobenius_power = [&](int k) {
        return powmod(x, pow(p, static_cast<unsigned long>(k)), f);
    };
    if (!(frobenius_power(n) == rem(x, f))) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime(static_cast<std::uint64_t>(q))) continue;
        if (!gcd(frobenius_power(n / q) - x, f).is_one()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

HenselPair hensel_lift(const ZPoly& f, const FpPoly& g0, const FpPoly& h0, int l) {
    if (l < 1) throw std::invalid_argument("target precision must be >= 1");
    if (f.is_zero() || !f.lc().is_one()) throw std::invalid_argument("Hensel lifting needs a monic polynomial");
    if (g0.is_zero() || h0.is_zero() || g0.lc().value != 1 || h0.lc().value != 1) {
        throw std::invalid_argument("seed factors must be monic");
    }
    const std::uint32_t p = g0.ring().modulus();
    if (!(reduce_mod(f, p) == g0 * h0)) throw std::invalid_argument("seed factors do not multiply to f mod p");
    const auto eg = xgcd(g0, h0);
    if (!eg.gcd.is_one()) throw std::domain_error("seed factors are not coprime mod p");

    const Integer pz(static_cast<long>(p));
    const Integer target = pow(pz, static_cast<unsigned long>(l));
    Integer m = pz;
    ZPoly g = lift_nonnegative(g0), h = lift_nonnegative(h0);
    ZPoly s = lift_nonnegative(eg.s), t = lift_nonnegative(eg.t);
    while (m < target) {
        const Integer m2 = std::min(m * m, target);
        const IntegerModRing ring(m2);
        const ZmPoly fm = reduce_mod(f, ring), gm = reduce_mod(g, ring), hm = reduce_mod(h, ring);
        const ZmPoly sm = reduce_mod(s, ring), tm = reduce_mod(t, ring);
        const ZmPoly e = fm - gm * hm;
        auto [q, r] = divrem(sm * e, hm);
        const ZmPoly g1 = gm + tm * e + q * gm;
        const ZmPoly h1 = hm + r;
        const ZmPoly b = sm * g1 + tm * h1 - ZmPoly::constant(ring, ring.one());
        auto [c, d] = divrem(sm * b, h1);
        const ZmPoly s1 = sm - d;
        const ZmPoly t1 = tm - tm * b - c * g1;
        g = lift_nonnegative(g1);
        h = lift_nonnegative(h1);
        s = lift_nonnegative(s1);
        t = lift_nonnegative(t1);
        m = m2;
    }
    if (g.degree() != g0.degree() || h.degree() != h0.degree()) {
        throw std::logic_error("Hensel step changed a factor degree");
    }
    return {g.with_var(f.var()), h.with_var(f.var()), target};
}

std::vector<ZPoly> multifactor_hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, int l) {
    if (factors.empty()) throw std::invalid_argument("no factors to lift");
    if (factors.size() == 1) {
        const Integer m = pow(Integer(static_cast<long>(factors[0].ring().modulus())), static_cast<unsigned long>(l));
        return {nonnegative_mod(f, m)};
    }
    const std::size_t half = factors.size() / 2;
    const std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
    const std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
    FpPoly g0 = fp_one(factors[0].ring(), f.var()), h0 = g0;
    for (const auto& x : left) g0 = g0 * x;
    for (const auto& x : right) h0 = h0 * x;
    const HenselPair pair = hensel_lift(f, g0, h0, l);
    auto out = multifactor_hensel_lift(pair.g, left, l);
    auto rest = multifactor_hensel_lift(pair.h, right, l);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// ---------------------------------------------------------------------------
// Z and Q
// ---------------------------------------------------------------------------

ZPoly IntegerFactorization::product(const std::string& var) const {
    ZPoly acc = ZPoly::constant(kZ, content, var);
    for (const auto& [g, m] : factors) acc = acc * pow(g, static_cast<unsigned>(m));
    return acc.with_var(var);
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition_Z(const ZPoly& input) {
    std::vector<std::pair<ZPoly, int>> out;
    const ZPoly a = primitive_part(input);
    if (a.degree() < 1) return out;
    const ZPoly b = derivative(a);
    const ZPoly c = gcd(a, b);
    ZPoly w = divexact(a, c);
    ZPoly y = divexact(b, c);
    ZPoly z = y - derivative(w);
    int i = 1;
    while (w.degree() >= 1) {
        const ZPoly g = z.is_zero() ? w : gcd(w, z);
        if (g.degree() >= 1) out.emplace_back(primitive_part(g), i);
        w = divexact(w, g);
        y = divexact(z, g);
        z = y - derivative(w);
        ++i;
    }
    return out;
}

namespace {

struct PrimeChoice {
    std::uint32_t prime = 0;
    std::vector<std::pair<FpPoly, int>> ddf;
    std::size_t count = 0;
};

/// Zassenhaus on a primitive squarefree polynomial with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& a, std::uint64_t seed) {
    const int n = a.degree();
    if (n <= 1) return {a};
    if (static_cast<std::size_t>(n) > kMaxDegree) throw std::invalid_argument("degree too large for factor_over_Z");

    DegreeSet allowed;
    allowed.set();
    std::optional<PrimeChoice> best;
    int good = 0;
    for (std::uint32_t p = 3; p < 100000 && good < 7; p += 2) {
        if (!is_prime(p) || divisible_by(a.lc(), p)) continue;
        const FpPoly ap = reduce_mod(a, p);
        if (!gcd(ap, derivative(ap)).is_one()) continue;
        ++good;
        auto ddf = distinct_degree_factorization(ap);
        const auto degs = factor_degrees(ddf);
        allowed &= subset_sums(degs);
        if (!best || degs.size() < best->count) best = PrimeChoice{p, ddf, degs.size()};
        if (only_trivial(allowed, n)) return {a};
    }
    if (!best) throw std::logic_error("no squarefree reduction found");

    const std::uint32_t p = best->prime;
    std::mt19937_64 rng(seed);
    std::vector<FpPoly> modular;
    for (const auto& [g, d] : best->ddf) {
        for (auto& h : equal_degree_factorization(g, d, rng)) modular.push_back(h);
    }
    std::sort(modular.begin(), modular.end(), canonical_less);
    if (modular.size() == 1) return {a};

    const Integer pz(static_cast<long>(p));
    const Integer bound = pow(Integer(2), static_cast<unsigned long>(n)) * norm2_ceil(a) * abs(a.lc());
    int l = 1;
    Integer modulus = pz;
    while (modulus <= bound * Integer(2)) {
        modulus *= pz;
        ++l;
    }
    const Integer lc_inv = invert_mod(a.lc(), modulus);
    const ZPoly monic = nonnegative_mod(a.scale(lc_inv), modulus);
    const std::vector<ZPoly> lifted = multifactor_hensel_lift(monic, modular, l);

    std::vector<ZPoly> found;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    ZPoly rest = a;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool hit = false;
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        while (true) {
            int deg = 0;
            for (std::size_t i : pick) deg += lifted[remaining[i]].degree();
            if (allowed.test(static_cast<std::size_t>(deg))) {
                const Integer b = rest.lc();
                ZPoly cand = ZPoly::constant(kZ, b, a.var());
                for (std::size_t i : pick) cand = nonnegative_mod(cand * lifted[remaining[i]], modulus);
                cand = symmetric_mod(cand, modulus);
                const Integer c0 = cand.coeff(0), r0 = rest.coeff(0) * b;
                const bool plausible = c0.is_zero() ? r0.is_zero() : divides(c0, r0);
                if (plausible) {
                    const ZPoly g = primitive_part(cand);
                    if (auto q = try_divide(rest, g)) {
                        found.push_back(g);
                        rest = *q;
                        std::vector<std::size_t> next;
                        for (std::size_t i = 0; i < remaining.size(); ++i) {
                            if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(remaining[i]);
                        }
                        remaining = std::move(next);
                        hit = true;
                        break;
                    }
                }
            }
            // next combination of s indices out of remaining.size()
            std::size_t k = s;
            while (k > 0 && pick[k - 1] == remaining.size() - s + k - 1) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t j = k; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    found.push_back(primitive_part(rest));
    return found;
}

}  // namespace

IntegerFactorization factor_over_Z(const ZPoly& f, std::uint64_t seed) {
    IntegerFactorization out;
    if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
    out.content = content(f);
    if (f.lc().sign() < 0) out.content = -out.content;
    if (f.degree() < 1) return out;
    for (const auto& [part, m] : squarefree_decomposition_Z(f)) {
        for (auto& g : zassenhaus(part, seed)) out.factors.emplace_back(g.with_var(f.var()), m);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.first == y.first) return x.second < y.second;
        return zpoly_less(x.first, y.first);
    });
    return out;
}

IrreducibilityWitness irreducible_over_Q(const ZPoly& f, std::uint64_t seed) {
    if (f.degree() < 1) throw std::domain_error("irreducibility needs degree >= 1");
    const ZPoly a = primitive_part(f);
    const int n = a.degree();
    IrreducibilityWitness w;
    if (n == 1) {
        w.irreducible = true;
        w.method = "degree_one";
        return w;
    }
    std::vector<SieveRow> rows;
    for (std::uint32_t p : small_primes(kIrreducibilityPrimeBound)) {
        if (divisible_by(a.lc(), p)) continue;
        const FpPoly ap = reduce_mod(a, p);
        if (!gcd(ap, derivative(ap)).is_one()) continue;
        auto ddf = distinct_degree_factorization(ap);
        if (ddf.size() == 1 && ddf[0].second == n) {
            w.irreducible = true;
            w.method = "irreducible_mod_p";
            w.prime = p;
            return w;
        }
        rows.push_back({p, factor_degrees(ddf)});
    }
    if (static_cast<std::size_t>(n) <= kMaxDegree) {
        DegreeSet allowed;
        allowed.set();
        std::vector<SieveRow> used;
        for (const auto& row : rows) {
            const DegreeSet next = allowed & subset_sums(row.degrees);
            if (next != allowed) {
                used.push_back(row);
                allowed = next;
            }
            if (only_trivial(allowed, n)) {
                w.irreducible = true;
                w.method = "degree_sieve";
                w.sieve = std::move(used);
                return w;
            }
        }
    }
    const auto fac = factor_over_Z(a, seed);
    w.method = "zassenhaus";
    if (fac.factors.size() == 1 && fac.factors[0].second == 1) {
        w.irreducible = true;
    } else {
        w.irreducible = false;
        w.factor = fac.factors.front().first;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Splitting types
// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<SplittingEntry>> try_classify(const Integer& disc_mod, const Integer& modulus, std::uint32_t p) {
    const Integer pz(static_cast<long>(p));
    const Integer d = mod(disc_mod, modulus);
    if (d.is_zero()) return std::nullopt;
    const int e = valuation(d, pz);
    const int l = valuation(modulus, pz);
    const int needed = p == 2 ? 3 : 1;
    if (l < e + needed) return std::nullopt;
    const Integer u = divexact(d, pow(pz, static_cast<unsigned long>(e)));
    const std::vector<SplittingEntry> split{{1, 1}, {1, 1}}, inert{{1, 2}}, ramified{{2, 1}};
    if (e % 2 != 0) return ramified;
    if (p == 2) {
        const long r = mod(u, Integer(8)).to_long();
        if (r == 1) return split;
        if (r == 5) return inert;
        return ramified;
    }
    // Euler's criterion on the unit part.
    const PrimeField field(p);
    const Residue ur = field.from_integer(u);
    const bool square = field.pow(ur, (p - 1) / 2) == field.one();
    return square ? split : inert;
}

void sort_entries(std::vector<SplittingEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const SplittingEntry& a, const SplittingEntry& b) {
        if (a.e != b.e) return a.e > b.e;
        return a.f < b.f;
    });
}

}  // namespace

std::vector<SplittingEntry> classify_quadratic_block(const Integer& disc_mod, const Integer& modulus, std::uint32_t p) {
    auto r = try_classify(disc_mod, modulus, p);
    if (!r) throw std::domain_error("precision too low to classify the discriminant");
    return *r;
}

SplittingType splitting_type(const ZPoly& f, std::uint32_t p, const SplittingOptions& options) {
    if (f.degree() < 1) throw std::invalid_argument("splitting type needs degree >= 1");
    if (!f.lc().is_one()) throw std::invalid_argument("splitting type needs a monic polynomial");
    if (options.check_irreducible && !irreducible_over_Q(f, options.seed).irreducible) {
        throw std::invalid_argument("splitting type needs an irreducible polynomial");
    }
    SplittingType out;
    out.prime = p;
    const FactorPattern pattern = factor_modp(reduce_mod(f, p), options.seed);
    if (pattern.is_squarefree()) {
        for (const auto& fp : pattern.factors) out.entries.push_back({1, fp.factor.degree()});
        sort_entries(out.entries);
        return out;
    }
    const FactorPower* repeated = nullptr;
    for (const auto& fp : pattern.factors) {
        if (fp.multiplicity == 1) continue;
        if (repeated != nullptr) throw UnsupportedShape("more than one repeated factor mod " + std::to_string(p));
        repeated = &fp;
    }
    if (repeated->factor.degree() != 1 || repeated->multiplicity != 2) {
        throw UnsupportedShape("repeated factor mod " + std::to_string(p) + " is not a linear factor of multiplicity 2");
    }
    const PrimeField field(p);
    const FpPoly g0 = repeated->factor * repeated->factor;
    FpPoly h0 = fp_one(field, f.var());
    for (const auto& fp : pattern.factors) {
        if (fp.multiplicity == 1) {
            h0 = h0 * fp.factor;
            out.entries.push_back({1, fp.factor.degree()});
        }
    }

    const Integer pz(static_cast<long>(p));
    const Integer disc = discriminant(f);
    if (disc.is_zero()) throw std::invalid_argument("splitting type needs a squarefree polynomial");
    int l = valuation(disc, pz) + 4;
    std::optional<std::vector<SplittingEntry>> previous;
    for (int round = 0; round < 12; ++round, l *= 2) {
        const HenselPair pair = hensel_lift(f, g0.with_var(f.var()), h0.with_var(f.var()), l);
        const ZPoly& q = pair.g;
        const Integer dq = q.coeff(1) * q.coeff(1) - Integer(4) * q.coeff(0);
        auto current = try_classify(dq, pair.modulus, p);
        if (current && previous && *current == *previous) {
            out.entries.insert(out.entries.end(), current->begin(), current->end());
            sort_entries(out.entries);
            return out;
        }
        previous = current;
    }
    throw std::runtime_error("p-adic precision did not stabilize");
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

FpPoly fppoly_from_json(const ordered_json& j, const PrimeField& field) {
    std::vector<Residue> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(field.from_integer(Integer::from_string(c.get<std::string>())));
    return FpPoly(field, std::move(cs), j.at("var").get<std::string>());
}

}  // namespace

ordered_json to_json(const FactorPattern& pattern) {
    ordered_json j;
    j["prime"] = pattern.prime;
    ordered_json fs = ordered_json::array();
    for (const auto& fp : pattern.factors) {
        ordered_json e;
        e["factor"] = to_json(fp.factor);
        e["multiplicity"] = fp.multiplicity;
        fs.push_back(std::move(e));
    }
    j["factors"] = std::move(fs);
    return j;
}

FactorPattern factor_pattern_from_json(const ordered_json& j) {
    FactorPattern out;
    out.prime = j.at("prime").get<std::uint32_t>();
    const PrimeField field(out.prime);
    for (const auto& e : j.at("factors")) {
        out.factors.push_back({fppoly_from_json(e.at("factor"), field), e.at("multiplicity").get<int>()});
    }
    return out;
}

ordered_json to_json(const SplittingType& type) {
    ordered_json j;
    j["prime"] = type.prime;
    ordered_json es = ordered_json::array();
    for (const auto& en : type.entries) es.push_back(ordered_json{{"e", en.e}, {"f", en.f}});
    j["entries"] = std::move(es);
    return j;
}

SplittingType splitting_type_from_json(const ordered_json& j) {
    SplittingType out;
    out.prime = j.at("prime").get<std::uint32_t>();
    for (const auto& e : j.at("entries")) out.entries.push_back({e.at("e").get<int>(), e.at("f").get<int>()});
    return out;
}

ordered_json to_json(const IrreducibilityWitness& w) {
    ordered_json j;
    j["irreducible"] = w.irreducible;
    j["method"] = w.method;
    if (w.method == "irreducible_mod_p") j["prime"] = w.prime;
    if (!w.sieve.empty()) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : w.sieve) rows.push_back(ordered_json{{"prime", r.prime}, {"degrees", r.degrees}});
        j["sieve"] = std::move(rows);
    }
    if (w.factor) j["factor"] = to_json(*w.factor);
    return j;
}

IrreducibilityWitness irreducibility_witness_from_json(const ordered_json& j) {
    IrreducibilityWitness w;
    w.irreducible = j.at("irreducible").get<bool>();
    w.method = j.at("method").get<std::string>();
    if (j.contains("prime")) w.prime = j.at("prime").get<std::uint32_t>();
    if (j.contains("sieve")) {
        for (const auto& r : j.at("sieve")) {
            w.sieve.push_back({r.at("prime").get<std::uint32_t>(), r.at("degrees").get<std::vector<int>>()});
        }
    }
    if (j.contains("factor")) w.factor = zpoly_from_json(j.at("factor"));
    return w;
}

std::string to_string(const SplittingType& type) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < type.entries.size(); ++i) {
        if (i > 0) os << ",";
        os << "(" << type.entries[i].e << "," << type.entries[i].f << ")";
    }
    os << "]";
    return os.str();
}

}  // namespace ptk
