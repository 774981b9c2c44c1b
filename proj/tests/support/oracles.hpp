#pragma once

// Independent reference computations and catalog facts for the tests.
// Nothing here calls the library's normal-form code.

#include <cstddef>
#include <string>
#include <vector>

#include "prettygood/intlin.hpp"
#include "prettygood/rootdatum.hpp"

namespace oracle {

using prettygood::Integer;
using prettygood::IntMatrix;

/// Determinant by fraction-free elimination with row pivoting.
Integer det(std::vector<std::vector<Integer>> a);

/// d_k / d_{k-1} where d_k is the gcd of all k x k minors, for k up to the rank.
std::vector<Integer> determinantal_divisors(const IntMatrix& m);

/// Rank over Q by exact fraction-free elimination.
std::size_t rank_q(const IntMatrix& m);

struct TypeFacts {
    std::size_t roots;
    std::vector<long> bad_primes;
    std::vector<long> highest_coefficients;  // Bourbaki order
    std::vector<long> fundamental_group;     // invariant factors of Lambda / Z Phi
};

/// Catalog numbers for an irreducible type name such as "E8".
TypeFacts facts(const std::string& type);

/// Irreducible type names of rank at most max_rank.
std::vector<std::string> irreducible_types(std::size_t max_rank);

/// Cauchy: an element of order p exists iff p divides the torsion order.
bool has_p_torsion_bruteforce(const prettygood::FinAbGroup& g, long p);

}  // namespace oracle
