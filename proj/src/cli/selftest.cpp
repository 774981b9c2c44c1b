#include <chrono>
#include <functional>
#include <sstream>

#include "prettygood/certificate.hpp"
#include "prettygood/cli.hpp"
#include "prettygood/isogeny.hpp"
#include "prettygood/primes.hpp"
#include "prettygood/random_data.hpp"
#include "prettygood/standardness.hpp"
#include "prettygood/subsystems.hpp"

namespace prettygood {

namespace {

using Check = std::function<void(SuiteResult&)>;

SuiteResult run_suite(const std::string& name, const Check& body) {
    SuiteResult res;
    res.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(res);
    } catch (const std::exception& e) {
        res.failures.push_back(std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

void expect(SuiteResult& res, bool ok, const std::string& what) {
    ++res.cases;
    if (!ok) {
        res.failures.push_back(what);
    }
}

std::string tag(const std::string& name, long p) {
    return name + " p=" + std::to_string(p);
}

// Presets small enough for the exhaustive oracles.
std::vector<std::pair<std::string, RootDatum>> small_sample(std::size_t limit) {
    std::vector<std::pair<std::string, RootDatum>> out;
    for (const auto& name : standard_presets(4)) {
        RootDatum r = preset(name);
        if (r.size() <= limit) {
            out.emplace_back(name, std::move(r));
        }
    }
    return out;
}

const long small_primes[] = {2, 3, 5, 7};

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
    const std::size_t limit = opts.exhaustive_limit();
    const auto sample = small_sample(limit);
    std::vector<SuiteResult> results;

    results.push_back(run_suite("rank-one facts", [](SuiteResult& res) {
        const RootDatum gl2 = preset("GL(2)");
        const RootDatum sl2 = preset("SC(A1)");
        const RootDatum pgl2 = preset("AD(A1)");
        expect(res, pretty_good(gl2, 2), "GL(2) p=2 pretty good");
        expect(res, !very_good(gl2, 2), "GL(2) p=2 not very good");
        for (const long p : small_primes) {
            expect(res, is_good(profile(sl2), p), tag("SC(A1) good", p));
            expect(res, is_good(profile(pgl2), p), tag("AD(A1) good", p));
        }
        expect(res, !pretty_good(sl2, 2), "SC(A1) p=2 not pretty good");
        expect(res, !pretty_good(pgl2, 2), "AD(A1) p=2 not pretty good");
    }));

    results.push_back(run_suite("good primes vs subset torsion", [&](SuiteResult& res) {
        for (const auto& [name, r] : sample) {
            const DatumProfile prof = profile(r);
            for (const long p : small_primes) {
                expect(res, is_good(prof, p) == good_via_torsion(r, p, limit), tag(name, p));
            }
        }
    }));

    results.push_back(run_suite("very good primes vs weight quotients", [&](SuiteResult& res) {
        for (const auto& [name, r] : sample) {
            for (const long p : small_primes) {
                expect(res, very_good(r, p) == very_good_via_weights(r, p, limit), tag(name, p));
            }
        }
    }));

    results.push_back(run_suite("pretty good vs brute force", [&](SuiteResult& res) {
        for (const auto& [name, r] : sample) {
            for (const long p : small_primes) {
                expect(res, pretty_good(r, p) == pretty_good_bruteforce(r, p, limit), tag(name, p));
            }
        }
    }));

    results.push_back(run_suite("duality and isogeny transfer", [&](SuiteResult& res) {
        const std::size_t max_rank = opts.deep ? 8 : 5;
        for (const auto& name : standard_presets(max_rank)) {
            const RootDatum r = preset(name);
            const RootDatum d = dual(r);
            expect(res, dual(d) == r, name + " double dual");
            for (const long p : {2L, 3L, 5L, 7L, 11L}) {
                const PrimeReport a = report(r, p);
                const PrimeReport b = report(d, p);
                expect(res, a.pretty_good == b.pretty_good, tag(name + " dual pretty good", p));
                expect(res, a.good == b.good, tag(name + " dual good", p));
                expect(res, a.center_smooth == b.dual_center_smooth, tag(name + " dual center", p));
            }
        }
        for (const auto& name : standard_presets(max_rank)) {
            if (name.rfind("SC(", 0) != 0) {
                continue;
            }
            const Isogeny f = natural_isogeny(parse_cartan_component(name.substr(3, name.size() - 4)));
            expect(res, validate_isogeny(f).empty(), name + " natural isogeny valid");
            for (const long p : {2L, 3L, 5L, 7L}) {
                transfer_pretty_good(f, p);  // throws on disagreement
                ++res.cases;
            }
        }
    }));

    results.push_back(run_suite("serial and parallel sweeps agree", [&](SuiteResult& res) {
        const auto primes = primes_up_to(30);
        for (const auto& [name, r] : sample) {
            expect(res,
                   prime_reports(r, primes, Execution::serial) ==
                       prime_reports(r, primes, Execution::parallel),
                   name + " reports");
            expect(res,
                   closure_classes(r, Execution::serial) == closure_classes(r, Execution::parallel),
                   name + " closure classes");
        }
    }));

    results.push_back(run_suite("coxeter fixed points on random type A data", [&](SuiteResult& res) {
        Rng rng(20261016);
        const int count = opts.deep ? 100 : 30;
        for (int i = 0; i < count; ++i) {
            const RandomTypeA gen = random_type_a_datum(rng, 6);
            const RootDatum& r = gen.datum;
            const std::string label = "random datum " + std::to_string(i);
            expect(res, validate(r).empty(), label + " valid");
            if (root_lattice_rank(r) == 0) {
                continue;
            }
            const CoxeterTorsion t = coxeter_fixed_torsion(r);
            expect(res, t.image_divisors == t.coroot_divisors, label + " divisors");
            expect(res, coxeter_closed_form(r) == t.element, label + " closed form");
        }
    }));

    results.push_back(run_suite("certificates verify after JSON round trip", [&](SuiteResult& res) {
        const std::size_t max_rank = opts.deep ? 8 : 4;
        const auto primes = primes_up_to(30);
        for (const auto& name : standard_presets(max_rank)) {
            const RootDatum r = preset(name);
            const DatumProfile prof = profile(r);
            for (const long p : primes) {
                const Certificate c = build_certificate(r, p);
                const bool claims_pg = std::holds_alternative<PrettyGoodProof>(c.payload);
                expect(res, claims_pg == pretty_good(prof, p), tag(name + " certificate kind", p));
                expect(res, claims_pg == classify(r, p).essentially_standard,
                       tag(name + " classify", p));
                const Certificate back = certificate_from_json(Json::parse(to_json(c).dump()));
                const auto problems = verify_certificate(back);
                std::string detail;
                for (const auto& pr : problems) {
                    detail += "; " + pr;
                }
                expect(res, problems.empty(), tag(name + " certificate verifies", p) + detail);
            }
        }
    }));

    results.push_back(run_suite("gluing surjectivity routes", [&](SuiteResult& res) {
        Rng rng(7);
        for (int i = 0; i < 100; ++i) {
            const auto n = static_cast<std::size_t>(1 + rng() % 4);
            const auto cols = n + static_cast<std::size_t>(rng() % 3);
            const long p = small_primes[rng() % 4];
            std::vector<unsigned> exps(n);
            for (auto& e : exps) {
                e = static_cast<unsigned>(1 + rng() % 3);
            }
            check_gluing(random_matrix(rng, n, cols, 4), exps, p);  // throws on disagreement
            ++res.cases;
        }
    }));

    return results;
}

}  // namespace prettygood
