#pragma once

// Bad, good, very good and pretty good primes of a root datum, by the
// classical criteria (production path) and by brute force over subsets of
// Phi (oracles).

#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "prettygood/intlin.hpp"
#include "prettygood/parallel.hpp"
#include "prettygood/rootdatum.hpp"

namespace prettygood {

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Prime-independent data the classical criteria need, computed once.
struct DatumProfile {
    std::vector<Component> components;
    std::vector<std::vector<Integer>> highest_coefficients;  // per component
    FinAbGroup character_mod_roots;    // X / Z Phi
    FinAbGroup cocharacter_mod_coroots;  // Y / Z Phi^vee
    std::size_t root_lattice_rank = 0;
    std::size_t rank = 0;
};

DatumProfile profile(const RootDatum& r);

std::set<long> bad_primes(const RootDatum& r);
std::set<long> bad_primes(const DatumProfile& prof);

bool is_good(const DatumProfile& prof, long p);
bool very_good(const RootDatum& r, long p);
bool very_good(const DatumProfile& prof, long p);

/// Good, and X/Z Phi, Y/Z Phi^vee have no p-torsion.
bool pretty_good(const RootDatum& r, long p);
bool pretty_good(const DatumProfile& prof, long p);

/// X / Z Phi has no p-torsion (the center is smooth).
bool center_smooth(const RootDatum& r, long p);
/// Y / Z Phi^vee has no p-torsion (the center of the dual group is smooth).
bool dual_center_smooth(const RootDatum& r, long p);

// --- subset quantifiers ----------------------------------------------------

/// Every distinct span closure {alpha : alpha in Z S} over all subsets S,
/// sorted. Torsion of X / Z S depends only on Z S, which equals Z of the
/// closure, so these represent all subsets on the X side.
std::vector<RootSubset> closure_classes(const RootDatum& r, Execution exec = Execution::parallel);

/// True iff pred holds for every closure class. TooLarge if |Phi| > limit.
bool every_closure_class(const RootDatum& r, std::size_t limit,
                         const std::function<bool(const RootSubset&)>& pred,
                         Execution exec = Execution::parallel);

/// True iff pred holds for every one of the 2^|Phi| subsets. TooLarge if
/// |Phi| > limit (the limit is additionally capped at 24).
bool every_subset(const RootDatum& r, std::size_t limit,
                  const std::function<bool(const RootSubset&)>& pred,
                  Execution exec = Execution::parallel);

/// Z Phi / Z Phi' has no p-torsion for all Phi'.
bool good_via_torsion(const RootDatum& r, long p, std::size_t exhaustive_limit,
                      Execution exec = Execution::parallel);

/// Lambda / Z Phi' has no p-torsion for all Phi'.
bool very_good_via_weights(const RootDatum& r, long p, std::size_t exhaustive_limit,
                           Execution exec = Execution::parallel);

/// The definition: X / Z Phi' and Y / Z Phi'^vee have no p-torsion for all
/// Phi'. The Y side is enumerated over closure classes of the dual datum,
/// since Z Phi' does not determine Z Phi'^vee.
bool pretty_good_bruteforce(const RootDatum& r, long p, std::size_t exhaustive_limit,
                            Execution exec = Execution::parallel);

/// The definition over all 2^|Phi| subsets, no class reduction.
bool pretty_good_all_subsets(const RootDatum& r, long p, std::size_t exhaustive_limit,
                             Execution exec = Execution::parallel);
bool good_all_subsets(const RootDatum& r, long p, std::size_t exhaustive_limit,
                      Execution exec = Execution::parallel);

// --- reports ---------------------------------------------------------------

struct TorsionBound {
    Integer bound = 1;
};

/// Every prime above the bound is pretty good.
TorsionBound failing_prime_bound(const RootDatum& r);
TorsionBound failing_prime_bound(const DatumProfile& prof);

struct PrimeReport {
    long p = 0;
    bool bad = false;
    bool good = true;
    bool very_good = true;
    bool pretty_good = true;
    bool center_smooth = true;
    bool dual_center_smooth = true;

    friend bool operator==(const PrimeReport&, const PrimeReport&) = default;
};

/// p == 0 stands for characteristic zero: every bit is true.
PrimeReport report(const RootDatum& r, long p);
PrimeReport report(const DatumProfile& prof, long p);

/// Reports ordered like `primes`, whatever order they complete in.
std::vector<PrimeReport> prime_reports(const RootDatum& r, const std::vector<long>& primes,
                                       Execution exec = Execution::parallel);

std::vector<long> primes_up_to(long n);

/// "all centralizers smooth" or "non-smooth centralizer exists".
const char* smoothness_verdict(const PrimeReport& rep);

}  // namespace prettygood
