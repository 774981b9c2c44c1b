#pragma once

// Machine-checkable certificates for the smoothness verdict at a prime:
// either the torsion-freeness data proving p pretty good, or an explicit
// subgroup whose centralizer has a character group with p-torsion.

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "prettygood/intlin.hpp"
#include "prettygood/json_io.hpp"
#include "prettygood/rootdatum.hpp"
#include "prettygood/subsystems.hpp"

namespace prettygood {

struct ClassificationGap : std::logic_error {
    using std::logic_error::logic_error;
};

struct PrettyGoodProof {
    std::vector<long> bad_primes;
    std::vector<std::vector<Integer>> highest_coefficients;
    FinAbGroup character_quotient;    // X / Z Phi
    FinAbGroup cocharacter_quotient;  // Y / Z Phi^vee
};

struct CenterTorsion {
    FinAbGroup character_quotient;  // X / Z Phi, with p-torsion
};

struct BadPrimeSubsystem {
    std::size_t component = 0;
    std::size_t node = 0;
    Integer coefficient;
    RootSubset subset;
    FinAbGroup root_quotient;       // Z Phi / Z Phi'
    FinAbGroup character_quotient;  // X / Z Phi'
};

struct CoxeterCertificate {
    bool on_dual = false;            // element lives in the Weyl group of the dual datum
    std::vector<std::size_t> word;   // s = product of these reflections, left to right
    WeylElement element;
    FinAbGroup fixed_character_group;  // X / (s-1)X
};

using CertificatePayload =
    std::variant<PrettyGoodProof, CenterTorsion, BadPrimeSubsystem, CoxeterCertificate>;

struct Certificate {
    RootDatum datum;
    long p = 0;
    CertificatePayload payload;

    /// "pretty-good-proof", "center-torsion", "bad-prime-subsystem", "coxeter-torsion"
    std::string kind() const;
};

/// Selection order: pretty-good proof; center torsion; crossed node when p
/// is bad; Coxeter fixed points on the type-A part of the datum, then of its
/// dual. Throws ClassificationGap if none applies.
Certificate build_certificate(const RootDatum& r, long p);

/// Problems found when re-running the check; empty means verified.
std::vector<std::string> verify_certificate(const Certificate& c);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

}  // namespace prettygood
