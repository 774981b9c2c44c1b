#pragma once

// Isogenies of root data f: X -> X~, stored on character lattices: the
// matrix F sends source coordinates to target coordinates (x~ = F x), so the
// corresponding map of groups runs from target to source.

#include <string>
#include <vector>

#include "prettygood/intlin.hpp"
#include "prettygood/rootdatum.hpp"

namespace prettygood {

struct Isogeny {
    RootDatum source;
    RootDatum target;
    IntMatrix matrix;
};

struct InvalidIsogeny : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> validate_isogeny(const Isogeny& f);

/// X~ / f(X).
FinAbGroup cokernel(const Isogeny& f);
/// Y / f^vee(Y~).
FinAbGroup dual_cokernel(const Isogeny& f);

bool separable_at(const Isogeny& f, long p);

struct Transfer {
    bool source_pretty_good = false;
    bool target_pretty_good = false;
    bool applies = false;
};

/// When the cokernel has no p-torsion the two sides must agree; a
/// disagreement throws std::logic_error.
Transfer transfer_pretty_good(const Isogeny& f, long p);

/// g after f.
Isogeny compose(const Isogeny& f, const Isogeny& g);

/// AD(T) -> SC(T) given by the Cartan matrix (inclusion Z Phi -> Lambda).
Isogeny natural_isogeny(const CartanComponent& type);

}  // namespace prettygood
