#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "prettygood/certificate.hpp"
#include "prettygood/cli.hpp"
#include "prettygood/json_io.hpp"
#include "prettygood/primes.hpp"
#include "prettygood/standardness.hpp"

namespace prettygood {

namespace {

enum Exit { ok = 0, negative = 1, usage = 2 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool text = false;

    void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

RootDatum checked_datum(const std::string& input) {
    RootDatum r = load_datum(input);
    const auto problems = validate(r);
    if (!problems.empty()) {
        throw UsageError("invalid root datum: " + problems.front());
    }
    return r;
}

long parse_prime(const std::string& s, bool allow_zero) {
    long p = 0;
    try {
        std::size_t used = 0;
        p = std::stol(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
    } catch (const std::logic_error&) {
        throw UsageError("not an integer: " + s);
    }
    if (!(is_prime(p) || (allow_zero && p == 0))) {
        throw UsageError(s + (allow_zero ? " is neither 0 nor prime" : " is not prime"));
    }
    return p;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? sep : "") + v[i];
    }
    return s;
}

std::string group_text(const FinAbGroup& g) { return g.to_string(); }

int cmd_validate(const Context& ctx, const std::string& input) {
    const RootDatum r = load_datum(input);
    const auto problems = validate(r);
    if (ctx.text) {
        if (problems.empty()) {
            ctx.out << "ok: rank " << r.rank() << ", " << r.size() << " roots, type "
                    << cartan_type_name(components(r)) << '\n';
        }
        for (const auto& p : problems) {
            ctx.out << p << '\n';
        }
    } else {
        Json j{{"valid", problems.empty()}, {"violations", problems}};
        if (problems.empty()) {
            j["type"] = cartan_type_name(components(r));
        }
        ctx.emit(j);
    }
    return problems.empty() ? ok : negative;
}

int cmd_primes(const Context& ctx, const std::string& input, long max_prime) {
    const RootDatum r = checked_datum(input);
    const DatumProfile prof = profile(r);
    const Integer bound = failing_prime_bound(prof).bound;
    if (bound > 1000000) {
        throw TooLarge("failing prime bound " + bound.get_str() + " is out of range");
    }
    const long top = std::max(max_prime, bound.get_si());
    const auto primes = primes_up_to(top);
    std::vector<PrimeReport> reports(primes.size());
    for_each_index(primes.size(), Execution::parallel,
                   [&](std::size_t i) { reports[i] = report(prof, primes[i]); });
    if (ctx.text) {
        for (const auto& rep : reports) {
            ctx.out << "p=" << rep.p << " bad=" << rep.bad << " good=" << rep.good
                    << " very_good=" << rep.very_good << " pretty_good=" << rep.pretty_good
                    << " center_smooth=" << rep.center_smooth
                    << " dual_center_smooth=" << rep.dual_center_smooth << " : "
                    << smoothness_verdict(rep) << '\n';
        }
    } else {
        Json arr = Json::array();
        for (const auto& rep : reports) {
            Json j = to_json(rep);
            j["verdict"] = smoothness_verdict(rep);
            arr.push_back(std::move(j));
        }
        ctx.emit(arr);
    }
    return ok;
}

std::string certificate_text(const Certificate& c) {
    std::ostringstream s;
    s << c.kind() << " at p=" << c.p << '\n';
    std::visit(
        [&](const auto& pl) {
            using T = std::decay_t<decltype(pl)>;
            if constexpr (std::is_same_v<T, PrettyGoodProof>) {
                s << "  good; X/ZPhi = " << group_text(pl.character_quotient)
                  << ", Y/ZPhi^vee = " << group_text(pl.cocharacter_quotient) << '\n';
            } else if constexpr (std::is_same_v<T, CenterTorsion>) {
                s << "  X/ZPhi = " << group_text(pl.character_quotient) << '\n';
            } else if constexpr (std::is_same_v<T, BadPrimeSubsystem>) {
                s << "  component " << pl.component << ", node " << pl.node << ", coefficient "
                  << pl.coefficient.get_str() << '\n'
                  << "  ZPhi/ZPhi' = " << group_text(pl.root_quotient)
                  << ", X/ZPhi' = " << group_text(pl.character_quotient) << '\n';
            } else {
                std::vector<std::string> w;
                for (const auto i : pl.word) {
                    w.push_back(std::to_string(i));
                }
                s << "  " << (pl.on_dual ? "dual datum" : "datum") << ", word [" << join(w, " ")
                  << "]\n  X/(s-1)X = " << group_text(pl.fixed_character_group) << '\n';
            }
        },
        c.payload);
    return s.str();
}

int cmd_certificate(const Context& ctx, const std::string& input, const std::string& p_text) {
    const RootDatum r = checked_datum(input);
    const Certificate c = build_certificate(r, parse_prime(p_text, false));
    if (ctx.text) {
        ctx.out << certificate_text(c);
    } else {
        ctx.emit(to_json(c));
    }
    return ok;
}

int cmd_verify(const Context& ctx, const std::string& input) {
    const Certificate c = certificate_from_json(load_json(input));
    const auto problems = verify_certificate(c);
    if (ctx.text) {
        ctx.out << (problems.empty() ? "verified " + c.kind() : "rejected " + c.kind()) << '\n';
        for (const auto& p : problems) {
            ctx.out << "  " << p << '\n';
        }
    } else {
        ctx.emit(Json{{"kind", c.kind()}, {"verified", problems.empty()}, {"problems", problems}});
    }
    return problems.empty() ? ok : negative;
}

int cmd_classify(const Context& ctx, const std::string& input, const std::string& p_text) {
    const RootDatum r = checked_datum(input);
    const Verdict v = classify(r, parse_prime(p_text, true));
    if (ctx.text) {
        ctx.out << "p=" << v.characteristic << ": " << v.text() << '\n';
    } else {
        ctx.emit(Json{{"p", v.characteristic},
                      {"essentially_standard", v.essentially_standard},
                      {"verdict", v.text()}});
    }
    return v.essentially_standard ? ok : negative;
}

int cmd_decompose(const Context& ctx, const std::string& input, const std::string& p_text) {
    const RootDatum r = checked_datum(input);
    const long p = parse_prime(p_text, false);
    Decomposition d;
    try {
        d = decompose(r, p);
    } catch (const BadPrime& e) {
        ctx.err << e.what() << '\n';
        return negative;
    }
    if (ctx.text) {
        std::vector<std::string> a;
        for (const auto m : d.a_blocks) {
            a.push_back("A" + std::to_string(m));
        }
        std::vector<std::string> vg;
        for (const auto& c : d.vg_blocks) {
            vg.push_back(c.name());
        }
        ctx.out << "p=" << p << " torus rank " << d.torus_rank << "; A-blocks [" << join(a, " ")
                << "]; very good blocks [" << join(vg, " ") << "]; "
                << (d.witness_ok ? "witness ok"
                                 : "needs torus augmentation " + std::to_string(d.torus_augmentation))
                << '\n';
    } else {
        ctx.emit(to_json(d));
    }
    return ok;
}

void print_datum(const Context& ctx, const RootDatum& r) {
    if (!ctx.text) {
        ctx.emit(to_json(r));
        return;
    }
    ctx.out << "rank " << r.rank() << ", type " << cartan_type_name(components(r)) << '\n';
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::vector<std::string> a;
        std::vector<std::string> b;
        for (std::size_t j = 0; j < r.rank(); ++j) {
            a.push_back(std::to_string(r.root(i)[j]));
            b.push_back(std::to_string(r.coroot(i)[j]));
        }
        ctx.out << std::setw(4) << i << "  [" << join(a, " ") << "]  [" << join(b, " ") << "]\n";
    }
}

int cmd_dual(const Context& ctx, const std::string& input) {
    print_datum(ctx, dual(checked_datum(input)));
    return ok;
}

int cmd_sum(const Context& ctx, const std::vector<std::string>& specs) {
    RootDatum r = torus(0);
    for (const auto& s : specs) {
        r = direct_sum(r, checked_datum(s));
    }
    print_datum(ctx, r);
    return ok;
}

int cmd_snf(const Context& ctx, const std::string& input) {
    const IntMatrix m = matrix_from_json(load_json(input));
    const SmithForm f = smith_normal_form(m);
    if (ctx.text) {
        std::vector<std::string> d;
        for (const auto& x : f.divisors) {
            d.push_back(x.get_str());
        }
        ctx.out << "divisors [" << join(d, " ") << "]\n";
    } else {
        Json d = Json::array();
        for (const auto& x : f.divisors) {
            d.push_back(to_json(x));
        }
        ctx.emit(Json{{"divisors", d}, {"left", to_json(f.left)}, {"right", to_json(f.right)}});
    }
    return ok;
}

int cmd_gluing(const Context& ctx, const std::string& matrix, const std::string& exps,
               const std::string& p_text) {
    const IntMatrix a = matrix_from_json(load_json(matrix));
    std::vector<unsigned> e;
    try {
        e = load_json(exps).get<std::vector<unsigned>>();
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(std::string("exponents must be a list of positive integers: ") + ex.what());
    }
    const GluingCheck g = check_gluing(a, e, parse_prime(p_text, false));
    if (ctx.text) {
        ctx.out << (g.surjective ? "surjective" : "not surjective") << " (rank mod p "
                << g.rank_mod_p << ")\n";
    } else {
        ctx.emit(to_json(g));
    }
    return g.surjective ? ok : negative;
}

int cmd_selftest(const Context& ctx, bool deep) {
    const auto results = run_selftest({deep});
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        all = all && r.ok();
        if (ctx.text) {
            ctx.out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, "
                    << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
            for (const auto& f : r.failures) {
                ctx.out << "  " << f << '\n';
            }
        } else {
            arr.push_back(Json{{"suite", r.name},
                               {"passed", r.ok()},
                               {"cases", r.cases},
                               {"failures", r.failures}});
        }
    }
    if (!ctx.text) {
        ctx.emit(arr);
    }
    return all ? ok : negative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bad, good, very good and pretty good primes of root data", "prettygood"};
    app.require_subcommand(1);
    bool json_flag = false;
    bool text_flag = false;
    auto* json_opt = app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_flag("--text", text_flag, "Plain text output")->excludes(json_opt);

    std::string datum;
    std::string prime;
    std::vector<std::string> many;
    long max_prime = 10;
    bool deep = false;
    std::string matrix;
    std::string exponents;

    const char* datum_help = "Preset such as SC(E8), inline JSON, or a JSON file";
    auto* validate_cmd = app.add_subcommand("validate", "Check the root datum axioms");
    validate_cmd->add_option("datum", datum, datum_help)->required();
    auto* primes_cmd = app.add_subcommand("primes", "Per-prime reports up to max(N, failing bound)");
    primes_cmd->add_option("datum", datum, datum_help)->required();
    primes_cmd->add_option("--max-prime", max_prime, "Report primes up to N")->check(CLI::NonNegativeNumber);
    auto* cert_cmd = app.add_subcommand("certificate", "Emit a smoothness certificate at p");
    cert_cmd->add_option("datum", datum, datum_help)->required();
    cert_cmd->add_option("p", prime, "Prime")->required();
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate");
    verify_cmd->add_option("certificate", datum, "Certificate JSON file or inline JSON")->required();
    auto* classify_cmd = app.add_subcommand("classify", "Essentially standard at p (0 allowed)");
    classify_cmd->add_option("datum", datum, datum_help)->required();
    classify_cmd->add_option("p", prime, "Prime or 0")->required();
    auto* decompose_cmd = app.add_subcommand("decompose", "Type-A block decomposition at a good p");
    decompose_cmd->add_option("datum", datum, datum_help)->required();
    decompose_cmd->add_option("p", prime, "Prime")->required();
    auto* dual_cmd = app.add_subcommand("dual", "Dual root datum");
    dual_cmd->add_option("datum", datum, datum_help)->required();
    auto* sum_cmd = app.add_subcommand("sum", "Direct sum of root data");
    sum_cmd->add_option("data", many, datum_help)->required();
    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf_cmd->add_option("matrix", matrix, "JSON list of rows, inline or a file")->required();
    auto* gluing_cmd = app.add_subcommand("gluing", "Surjectivity of Z^r -> prod Z/p^s_i");
    gluing_cmd->add_option("matrix", matrix, "JSON list of rows")->required();
    gluing_cmd->add_option("exponents", exponents, "JSON list of exponents")->required();
    gluing_cmd->add_option("p", prime, "Prime")->required();
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the property suites");
    selftest_cmd->add_flag("--deep", deep, "Exhaustive limit 18 instead of 12, larger samples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    const Context ctx{out, err, text_flag};
    try {
        if (validate_cmd->parsed()) return cmd_validate(ctx, datum);
        if (primes_cmd->parsed()) return cmd_primes(ctx, datum, max_prime);
        if (cert_cmd->parsed()) return cmd_certificate(ctx, datum, prime);
        if (verify_cmd->parsed()) return cmd_verify(ctx, datum);
        if (classify_cmd->parsed()) return cmd_classify(ctx, datum, prime);
        if (decompose_cmd->parsed()) return cmd_decompose(ctx, datum, prime);
        if (dual_cmd->parsed()) return cmd_dual(ctx, datum);
        if (sum_cmd->parsed()) return cmd_sum(ctx, many);
        if (snf_cmd->parsed()) return cmd_snf(ctx, matrix);
        if (gluing_cmd->parsed()) return cmd_gluing(ctx, matrix, exponents, prime);
        if (selftest_cmd->parsed()) return cmd_selftest(ctx, deep);
    } catch (const ClassificationGap& e) {
        err << "internal error: " << e.what() << '\n';
        return negative;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return negative;
    }
    return usage;
}

}  // namespace prettygood
