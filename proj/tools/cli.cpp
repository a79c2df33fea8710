#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include "ptk/obstruction.hpp"
#include "ptk/poly_io.hpp"
#include "ptk/pretzel.hpp"
#include "ptk/riley.hpp"

namespace ptk::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string range;
    std::optional<int> n;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string format = "text";
    std::string out;
    bool timing = false;
};

struct Item {
    int n = 0;
    bool pass = false;
    ordered_json json;
    std::string text;
};

void add_common(CLI::App& sub, Options& o) {
    sub.add_option("-n", o.n, "Single index");
    sub.add_option("--range", o.range, "Inclusive range a..b");
    sub.add_option("--seed", o.seed, "Seed for randomized splitting")->capture_default_str();
    sub.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    sub.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "report"}))
        ->capture_default_str();
    sub.add_option("--out", o.out, "Write output to this file instead of stdout");
    sub.add_flag("--timing", o.timing, "Include wall-clock timing in the report");
}

std::pair<int, int> parse_range(const std::string& text) {
    static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("invalid range '" + text + "': expected a..b");
    try {
        return {std::stoi(m[1].str()), std::stoi(m[2].str())};
    } catch (const std::out_of_range&) {
        throw UsageError("invalid range '" + text + "': endpoint out of range");
    }
}

// Indices for commands over the negative family: odd, negative, inclusive.
std::vector<int> negative_indices(const Options& o) {
    if (o.n && !o.range.empty()) throw UsageError("give either -n or --range, not both");
    if (o.n) {
        try {
            validate_negative_index(*o.n);
        } catch (const FamilyIndexError& e) {
            throw UsageError(e.what());
        }
        return {*o.n};
    }
    if (o.range.empty()) throw UsageError("one of -n or --range is required");
    auto [a, b] = parse_range(o.range);
    if (a > b) throw UsageError("invalid range " + o.range + ": start exceeds end");
    if (a % 2 == 0 || b % 2 == 0) throw UsageError("invalid range " + o.range + ": endpoints must be odd");
    if (b >= 0) throw UsageError("invalid range " + o.range + ": endpoints must be negative");
    std::vector<int> out;
    for (int n = a; n <= b; n += 2) out.push_back(n);
    return out;
}

// Indices for commands defined on every hyperbolic member: odd, not 1, 3, 5.
std::vector<int> family_indices(const Options& o) {
    if (o.n && !o.range.empty()) throw UsageError("give either -n or --range, not both");
    auto check = [](int n) {
        try {
            validate_family_index(n);
        } catch (const FamilyIndexError& e) {
            throw UsageError(e.what());
        }
    };
    if (o.n) {
        check(*o.n);
        return {*o.n};
    }
    if (o.range.empty()) throw UsageError("one of -n or --range is required");
    auto [a, b] = parse_range(o.range);
    if (a > b) throw UsageError("invalid range " + o.range + ": start exceeds end");
    if (a % 2 == 0 || b % 2 == 0) throw UsageError("invalid range " + o.range + ": endpoints must be odd");
    std::vector<int> out;
    for (int n = a; n <= b; n += 2)
        if (n != 1 && n != 3 && n != 5) out.push_back(n);
    if (out.empty()) throw UsageError("invalid range " + o.range + ": no valid indices");
    return out;
}

// Runs work over the indices on up to jobs threads; results come back in index order.
std::vector<Item> run_items(const std::vector<int>& indices, unsigned jobs, const std::function<Item(int)>& work) {
    std::vector<Item> items(indices.size());
    auto guarded = [&](std::size_t i) {
        const int n = indices[i];
        try {
            items[i] = work(n);
        } catch (const std::exception& e) {
            items[i] = Item{n, false, ordered_json{{"n", n}, {"error", e.what()}}, "n=" + std::to_string(n) + " error: " + e.what()};
        }
    };
    const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(indices.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < indices.size(); ++i) guarded(i);
        return items;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < indices.size(); i = next++) guarded(i);
        });
    for (auto& th : pool) th.join();
    return items;
}

class Output {
public:
    Output(const Options& o, std::ostream& out) : out_(out) {
        if (!o.out.empty()) {
            file_.open(o.out, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file " + o.out);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : out_; }

private:
    std::ostream& out_;
    std::ofstream file_;
};

ordered_json base_config(const std::string& command, const Options& o, const std::vector<int>& indices) {
    ordered_json c;
    c["command"] = command;
    if (indices.size() == 1 && o.n) {
        c["n"] = indices.front();
    } else if (!indices.empty()) {
        c["range"] = {indices.front(), indices.back()};
    }
    c["seed"] = o.seed;
    return c;
}

int emit(const Options& o, std::ostream& out, ordered_json config, const std::vector<Item>& items,
         double elapsed_ms, const std::string& label) {
    const std::size_t passed =
        static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const Item& i) { return i.pass; }));
    const bool all = passed == items.size();
    Output sink(o, out);
    auto& s = sink.stream();
    if (o.format == "report") {
        ordered_json r;
        r["schema"] = kReportSchema;
        r["tool"] = "ptk";
        r["version"] = kVersion;
        r["config"] = std::move(config);
        ordered_json arr = ordered_json::array();
        for (const auto& i : items) arr.push_back(i.json);
        r["items"] = std::move(arr);
        r["verdict"] = all ? "pass" : "fail";
        r["summary"] = {{"items", items.size()}, {"passed", passed}};
        if (o.timing) r["timing_ms"] = elapsed_ms;
        s << r.dump(2) << '\n';
    } else {
        for (const auto& i : items) s << i.text << '\n';
        if (items.size() > 1 || !all) s << label << ": " << passed << "/" << items.size() << " passed\n";
        if (o.timing) s << "elapsed: " << elapsed_ms << " ms\n";
    }
    return all ? kPass : kCheckFailed;
}

template <class F>
int timed(const Options& o, std::ostream& out, ordered_json config, const std::vector<int>& indices,
          const std::string& label, F&& work) {
    const auto start = std::chrono::steady_clock::now();
    auto items = run_items(indices, o.jobs, work);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return emit(o, out, std::move(config), items, ms, label);
}

const char* mark(bool ok) { return ok ? "pass" : "FAIL"; }

// gen ------------------------------------------------------------------------

int cmd_gen(const Options& o, const std::string& family, bool canonical, std::ostream& out) {
    const auto indices = family == "p" ? family_indices(o) : negative_indices(o);
    auto config = base_config("gen", o, indices);
    config["family"] = family;
    const bool single = indices.size() == 1;
    return timed(o, out, std::move(config), indices, "gen", [&](int n) {
        const ZPoly f = family == "p" ? gen_p(n) : gen_q(n);
        std::string body = canonical ? to_canonical(f) : to_pretty(f);
        std::string name = family + "_" + std::to_string(n);
        return Item{n, true, ordered_json{{"n", n}, {"name", name}, {"polynomial", to_json(f)}},
                    single ? body : name + " = " + body};
    });
}

// verify ---------------------------------------------------------------------

Item verify_one(int n, std::uint64_t seed) {
    ordered_json checks;
    std::ostringstream text;
    bool all = true;
    auto record = [&](const std::string& name, bool ok, ordered_json detail) {
        all = all && ok;
        detail["pass"] = ok;
        checks[name] = std::move(detail);
        text << ' ' << name << '=' << mark(ok);
    };

    record("invariants", check_family_invariants(n).empty(), {{"failures", check_family_invariants(n)}});

    const auto product = check_product_identity(n);
    record("product", product.holds, ordered_json::object());

    const auto rec = check_reciprocal(n);
    record("reciprocal", rec.holds, {{"constant", rec.constant.to_string()}});

    record("laurent", check_laurent_identity(n), ordered_json::object());

    if (mod_floor(n, 3) != 0) {
        const auto g = check_g_identity(n);
        record("g_identity", g.holds, {{"sign", g.sign}});
    }

    const auto m2 = check_mod2_pattern(n, seed);
    record("mod2", m2.ok(), to_json(m2));

    const auto m3 = check_mod3_structure(n);
    record("mod3", m3.ok(), to_json(m3));

    const auto sv = special_values(n);
    const auto sv_failures = check_special_values(sv);
    auto sv_json = to_json(sv);
    sv_json["failures"] = sv_failures;
    record("special_values", sv_failures.empty(), std::move(sv_json));

    const auto conj = verify_conjecture(n, seed);
    record("conjecture", conj.p_irreducible && conj.q_irreducible, to_json(conj));

    return Item{n, all, ordered_json{{"n", n}, {"pass", all}, {"checks", std::move(checks)}},
                "n=" + std::to_string(n) + text.str()};
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto indices = negative_indices(o);
    return timed(o, out, base_config("verify", o, indices), indices, "verify",
                 [&](int n) { return verify_one(n, o.seed); });
}

// obstruct -------------------------------------------------------------------

std::string describe(const Certificate& c) {
    std::ostringstream s;
    s << "n=" << c.n << ' ' << to_string(c.target) << ": " << to_string(c.verdict) << " [" << c.case_tag << "] "
      << c.polynomial_name << " at p=" << c.prime << " chains:";
    for (const auto& ch : c.chains) s << ' ' << ch.name << '=' << (ch.complete ? "complete" : "open");
    for (const auto& f : c.factors) {
        if (f.splitting) s << "\n  splitting " << to_string(*f.splitting) << " of " << to_pretty(f.factor);
    }
    return s.str();
}

int cmd_obstruct(const Options& o, const std::string& field, std::ostream& out) {
    const auto indices = negative_indices(o);
    auto config = base_config("obstruct", o, indices);
    config["field"] = field;
    return timed(o, out, std::move(config), indices, "obstruct", [&](int n) {
        std::vector<Certificate> certs;
        if (field != "Qsqrt-3") certs.push_back(no_qi_certificate(n, o.seed));
        if (field != "Qi") certs.push_back(no_qsqrt3_certificate(n, o.seed));
        bool all = true;
        ordered_json arr = ordered_json::array();
        std::string text;
        for (const auto& c : certs) {
            const bool ok = c.verdict == Verdict::NotSubfield && recheck(c).empty();
            all = all && ok;
            arr.push_back(to_json(c));
            if (!text.empty()) text += '\n';
            text += describe(c);
        }
        return Item{n, all, ordered_json{{"n", n}, {"pass", all}, {"certificates", std::move(arr)}}, text};
    });
}

// riley ----------------------------------------------------------------------

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct RileyOptions {
    std::string knot;
    std::string presentation;
    std::string chain;
    std::string param = "standard";
    std::string var;
    std::string golden;
    bool family_check = false;
};

int cmd_riley(const Options& o, const RileyOptions& r, std::ostream& out) {
    const int modes = int(!r.knot.empty()) + int(!r.presentation.empty()) + int(r.family_check);
    if (modes != 1) throw UsageError("give exactly one of --knot, --presentation, or --family-check");

    if (r.family_check) {
        const auto indices = family_indices(o);
        for (int n : indices)
            if (std::abs(n) > kFamilyBound)
                throw UsageError("|n| must be at most " + std::to_string(kFamilyBound) + " (got " + std::to_string(n) + ")");
        auto config = base_config("riley", o, indices);
        config["mode"] = "family_check";
        return timed(o, out, std::move(config), indices, "family-check", [](int n) {
            const auto rep = family_residue_check(n);
            std::ostringstream s;
            s << "n=" << n << " family residue: " << mark(rep.ok())
              << " first_relation=" << (rep.first_relation_zero ? "zero" : "nonzero") << " entries:";
            for (const auto& e : rep.entries)
                s << ' ' << e.index << '=' << (e.zero ? "zero" : e.divisible ? "divisible" : "not_divisible");
            return Item{n, rep.ok(), to_json(rep), s.str()};
        });
    }

    if (o.n || !o.range.empty()) throw UsageError("-n/--range only apply with --family-check");

    if (!r.knot.empty()) {
        try {
            (void)knot_data(r.knot);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        ordered_json config{{"command", "riley"}, {"mode", "knot"}, {"knot", r.knot}, {"seed", o.seed}};
        return timed(o, out, std::move(config), {0}, "riley", [&](int) {
            try {
                const auto res = riley_polynomial(r.knot, o.seed);
                std::ostringstream s;
                s << r.knot << ": degree " << res.derivation.polynomial.degree() << ", "
                  << (res.matches ? "match" : "MISMATCH") << ", "
                  << (res.irreducibility.irreducible ? "irreducible" : "reducible") << '\n'
                  << to_pretty(res.derivation.polynomial);
                return Item{0, res.matches && res.irreducibility.irreducible, to_json(res), s.str()};
            } catch (const RileyMismatch& e) {
                return Item{0, false, ordered_json{{"knot", r.knot}, {"error", e.what()}},
                            r.knot + ": MISMATCH " + e.what()};
            }
        });
    }

    if (r.chain.empty() || r.var.empty()) throw UsageError("--presentation needs --chain and --var");
    Presentation pres;
    SubstitutionChain chain;
    Parametrization param;
    try {
        param = parse_parametrization(r.param);
        pres = parse_presentation(read_file(r.presentation));
        chain = parse_chain(read_file(r.chain), parametrization_variables(param));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::optional<ZPoly> golden;
    if (!r.golden.empty()) {
        try {
            golden = parse_canonical(read_file(r.golden));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("golden: ") + e.what());
        }
    }
    ordered_json config{{"command", "riley"}, {"mode", "presentation"}, {"parametrization", to_string(param)},
                        {"variable", r.var}, {"seed", o.seed}};
    return timed(o, out, std::move(config), {0}, "riley", [&](int) {
        const auto d = derive_riley(pres, param, chain, r.var);
        ordered_json j = to_json(d);
        bool ok = d.first_relations_vanish && d.polynomial.degree() > 0;
        std::string text = "degree " + std::to_string(d.polynomial.degree());
        if (golden) {
            const bool match = d.polynomial == *golden || d.polynomial == -*golden;
            j["golden_match"] = match;
            ok = ok && match;
            text += match ? ", match" : ", MISMATCH";
        }
        return Item{0, ok, std::move(j), text + '\n' + to_pretty(d.polynomial)};
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification toolkit for the (-2,3,n) pretzel knot families", "ptk"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1, 1);

    Options o;
    std::string family;
    bool canonical = false;
    auto* gen = app.add_subcommand("gen", "Print p_n or q_n");
    add_common(*gen, o);
    gen->add_option("--family", family, "Polynomial family")->required()->check(CLI::IsMember({"p", "q"}));
    gen->add_flag("--canonical", canonical, "Print the canonical JSON form");

    auto* verify = app.add_subcommand("verify", "Run every identity and irreducibility check");
    add_common(*verify, o);

    std::string field = "both";
    auto* obstruct = app.add_subcommand("obstruct", "Certify that the trace field avoids Q(i) and Q(sqrt(-3))");
    add_common(*obstruct, o);
    obstruct->add_option("--field", field, "Target field")
        ->check(CLI::IsMember({"Qi", "Qsqrt-3", "both"}))
        ->capture_default_str();

    RileyOptions r;
    auto* riley = app.add_subcommand("riley", "Derive Riley polynomials");
    add_common(*riley, o);
    riley->add_option("--knot", r.knot, "Built-in knot: 2,3,5 | 2,3,-5 | -3,3,4");
    riley->add_option("--presentation", r.presentation, "Presentation file");
    riley->add_option("--chain", r.chain, "Substitution chain file");
    riley->add_option("--param", r.param, "standard | inverted_v")->capture_default_str();
    riley->add_option("--var", r.var, "Variable left after the chain");
    riley->add_option("--golden", r.golden, "Canonical polynomial to compare against");
    riley->add_flag("--family-check", r.family_check, "Check p_n against the family residue");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(o, family, canonical, out);
        if (*verify) return cmd_verify(o, out);
        if (*obstruct) return cmd_obstruct(o, field, out);
        return cmd_riley(o, r, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace ptk::cli
