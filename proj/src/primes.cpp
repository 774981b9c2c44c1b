#include "prettygood/primes.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "prettygood/subsystems.hpp"

namespace prettygood {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

DatumProfile profile(const RootDatum& r) {
    DatumProfile prof;
    prof.rank = r.rank();
    prof.components = components(r);
    for (auto& h : highest_roots(r)) {
        prof.highest_coefficients.push_back(std::move(h.coefficients));
    }
    const RootSubset everything = all_roots(r);
    prof.character_mod_roots = character_quotient(r, everything);
    prof.cocharacter_mod_coroots = cocharacter_quotient(r, everything);
    prof.root_lattice_rank = r.rank() - prof.character_mod_roots.free_rank;
    return prof;
}

std::set<long> bad_primes(const DatumProfile& prof) {
    std::set<long> bad;
    for (const auto& coeffs : prof.highest_coefficients) {
        for (const auto& c : coeffs) {
            const long m = c.get_si();
            for (long q = 2; q <= m; ++q) {
                if (m % q == 0 && is_prime(q)) {
                    bad.insert(q);
                }
            }
        }
    }
    return bad;
}

std::set<long> bad_primes(const RootDatum& r) {
    return bad_primes(profile(r));
}

bool is_good(const DatumProfile& prof, long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    return bad_primes(prof).count(p) == 0;
}

bool very_good(const DatumProfile& prof, long p) {
    if (!is_good(prof, p)) {
        return false;
    }
    return std::none_of(prof.components.begin(), prof.components.end(), [p](const Component& c) {
        return c.type.series == Series::A && (c.type.rank + 1) % static_cast<std::size_t>(p) == 0;
    });
}

bool very_good(const RootDatum& r, long p) {
    return very_good(profile(r), p);
}

bool pretty_good(const DatumProfile& prof, long p) {
#ifdef PRETTYGOOD_INJECT_FAULT
    // negative-control build: drop the cocharacter check
    return is_good(prof, p) && p_torsion_free(prof.character_mod_roots, p);
#else
    return is_good(prof, p) && p_torsion_free(prof.character_mod_roots, p) &&
           p_torsion_free(prof.cocharacter_mod_coroots, p);
#endif
}

bool pretty_good(const RootDatum& r, long p) {
    return pretty_good(profile(r), p);
}

bool center_smooth(const RootDatum& r, long p) {
    return p_torsion_free(character_quotient(r, all_roots(r)), p);
}

bool dual_center_smooth(const RootDatum& r, long p) {
    return p_torsion_free(cocharacter_quotient(r, all_roots(r)), p);
}

// --- subset quantifiers ----------------------------------------------------

std::vector<RootSubset> closure_classes(const RootDatum& r, Execution exec) {
    std::set<RootSubset> seen;
    std::vector<RootSubset> frontier{span_closure(r, RootSubset{})};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        struct Candidate {
            std::size_t cls;
            std::size_t root;
        };
        std::vector<Candidate> candidates;
        for (std::size_t c = 0; c < frontier.size(); ++c) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (!frontier[c].contains(i)) {
                    candidates.push_back({c, i});
                }
            }
        }
        std::vector<RootSubset> grown(candidates.size());
        for_each_index(candidates.size(), exec, [&](std::size_t k) {
            std::vector<std::size_t> idx = frontier[candidates[k].cls].indices;
            idx.push_back(candidates[k].root);
            grown[k] = span_closure(r, RootSubset(std::move(idx)));
        });
        std::vector<RootSubset> next;
        for (auto& g : grown) {
            if (seen.insert(g).second) {
                next.push_back(std::move(g));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace {

void check_limit(const RootDatum& r, std::size_t limit) {
    if (r.size() > limit) {
        throw TooLarge("|Phi| = " + std::to_string(r.size()) + " exceeds the exhaustive limit " +
                       std::to_string(limit));
    }
}

bool all_hold(const std::vector<RootSubset>& subsets,
              const std::function<bool(const RootSubset&)>& pred, Execution exec) {
    std::atomic<bool> ok{true};
    for_each_index(subsets.size(), exec, [&](std::size_t k) {
        if (ok.load(std::memory_order_relaxed) && !pred(subsets[k])) {
            ok.store(false, std::memory_order_relaxed);
        }
    });
    return ok.load();
}

}  // namespace

bool every_closure_class(const RootDatum& r, std::size_t limit,
                         const std::function<bool(const RootSubset&)>& pred, Execution exec) {
    check_limit(r, limit);
    return all_hold(closure_classes(r, exec), pred, exec);
}

bool every_subset(const RootDatum& r, std::size_t limit,
                  const std::function<bool(const RootSubset&)>& pred, Execution exec) {
    check_limit(r, std::min<std::size_t>(limit, 24));
    const std::size_t n = r.size();
    const std::size_t total = std::size_t{1} << n;
    std::atomic<bool> ok{true};
    for_each_index(total, exec, [&](std::size_t mask) {
        if (!ok.load(std::memory_order_relaxed)) {
            return;
        }
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) {
                idx.push_back(i);
            }
        }
        if (!pred(RootSubset(std::move(idx)))) {
            ok.store(false, std::memory_order_relaxed);
        }
    });
    return ok.load();
}

namespace {

bool root_quotient_free(const RootDatum& r, const IntMatrix& all, const RootSubset& s, long p) {
    for (const auto& d : relative_divisors(root_rows(r, s), all)) {
        if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
            return false;
        }
    }
    return true;
}

void require_prime(long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
}

}  // namespace

bool good_via_torsion(const RootDatum& r, long p, std::size_t exhaustive_limit, Execution exec) {
    require_prime(p);
    const IntMatrix all = root_matrix(r);
    return every_closure_class(
        r, exhaustive_limit,
        [&](const RootSubset& s) { return root_quotient_free(r, all, s, p); }, exec);
}

bool good_all_subsets(const RootDatum& r, long p, std::size_t exhaustive_limit, Execution exec) {
    require_prime(p);
    const IntMatrix all = root_matrix(r);
    return every_subset(
        r, exhaustive_limit,
        [&](const RootSubset& s) { return root_quotient_free(r, all, s, p); }, exec);
}

bool very_good_via_weights(const RootDatum& r, long p, std::size_t exhaustive_limit,
                           Execution exec) {
    require_prime(p);
    return every_closure_class(
        r, exhaustive_limit,
        [&](const RootSubset& s) { return p_torsion_free(weight_lattice_quotient(r, s), p); },
        exec);
}

bool pretty_good_bruteforce(const RootDatum& r, long p, std::size_t exhaustive_limit,
                            Execution exec) {
    require_prime(p);
    const bool x_side = every_closure_class(
        r, exhaustive_limit,
        [&](const RootSubset& s) { return p_torsion_free(character_quotient(r, s), p); }, exec);
    if (!x_side) {
        return false;
    }
    const RootDatum d = dual(r);
    return every_closure_class(
        d, exhaustive_limit,
        [&](const RootSubset& s) { return p_torsion_free(character_quotient(d, s), p); }, exec);
}

bool pretty_good_all_subsets(const RootDatum& r, long p, std::size_t exhaustive_limit,
                             Execution exec) {
    require_prime(p);
    return every_subset(
        r, exhaustive_limit,
        [&](const RootSubset& s) {
            return p_torsion_free(character_quotient(r, s), p) &&
                   p_torsion_free(cocharacter_quotient(r, s), p);
        },
        exec);
}

// --- reports ---------------------------------------------------------------

TorsionBound failing_prime_bound(const DatumProfile& prof) {
    TorsionBound b;
    for (const auto& coeffs : prof.highest_coefficients) {
        for (const auto& c : coeffs) {
            b.bound = std::max(b.bound, c);
        }
    }
    for (const auto& t : prof.character_mod_roots.torsion) {
        b.bound = std::max(b.bound, t);
    }
    for (const auto& t : prof.cocharacter_mod_coroots.torsion) {
        b.bound = std::max(b.bound, t);
    }
    return b;
}

TorsionBound failing_prime_bound(const RootDatum& r) {
    return failing_prime_bound(profile(r));
}

PrimeReport report(const DatumProfile& prof, long p) {
    PrimeReport rep;
    rep.p = p;
    if (p == 0) {
        return rep;
    }
    require_prime(p);
    rep.good = is_good(prof, p);
    rep.bad = !rep.good;
    rep.very_good = very_good(prof, p);
    rep.pretty_good = pretty_good(prof, p);
    rep.center_smooth = p_torsion_free(prof.character_mod_roots, p);
    rep.dual_center_smooth = p_torsion_free(prof.cocharacter_mod_coroots, p);
    if ((rep.very_good && !rep.pretty_good) || (rep.pretty_good && !rep.good) ||
        (rep.pretty_good && !(rep.center_smooth && rep.dual_center_smooth))) {
        throw std::logic_error("prime report for p = " + std::to_string(p) +
                               " violates very good => pretty good => good");
    }
    return rep;
}

PrimeReport report(const RootDatum& r, long p) {
    return report(profile(r), p);
}

std::vector<PrimeReport> prime_reports(const RootDatum& r, const std::vector<long>& primes,
                                       Execution exec) {
    const DatumProfile prof = profile(r);
    std::vector<PrimeReport> out(primes.size());
    for_each_index(primes.size(), exec, [&](std::size_t k) { out[k] = report(prof, primes[k]); });
    return out;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    for (long q = 2; q <= n; ++q) {
        if (is_prime(q)) {
            out.push_back(q);
        }
    }
    return out;
}

const char* smoothness_verdict(const PrimeReport& rep) {
    return rep.pretty_good ? "all centralizers smooth" : "non-smooth centralizer exists";
}

}  // namespace prettygood
