#pragma once

// Classification of (datum, characteristic) as essentially standard, and the
// integer pieces of the reduction to type A: the block decomposition and the
// gluing-matrix check.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "prettygood/intlin.hpp"
#include "prettygood/rootdatum.hpp"

namespace prettygood {

struct BadPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Verdict {
    long characteristic = 0;
    bool essentially_standard = false;

    std::string text() const;
};

/// p == 0 (characteristic zero) or p prime.
Verdict classify(const RootDatum& r, long p);

struct Decomposition {
    long p = 0;
    std::size_t torus_rank = 0;                // rank - rank Z Phi
    std::vector<std::size_t> a_blocks;         // m_i with p | m_i + 1
    std::vector<CartanComponent> vg_blocks;    // components very good at p
    bool witness_ok = false;                   // torus_rank >= #a_blocks
    std::size_t torus_augmentation = 0;        // extra torus rank needed otherwise
};

/// Throws BadPrime when p is bad for r.
Decomposition decompose(const RootDatum& r, long p);

struct GluingCheck {
    IntMatrix matrix;
    std::vector<unsigned> exponents;
    long p = 0;
    std::vector<Integer> divisors;
    std::size_t rank_mod_p = 0;
    bool surjective = false;
};

/// Z^r -> Z^n -> Z/p^{s_1} x ... x Z/p^{s_n} through A: surjectivity via
/// elementary divisors of A, via the rank of A mod p, and via the quotient
/// of the target by the image. All three must agree (logic_error otherwise).
GluingCheck check_gluing(const IntMatrix& a, const std::vector<unsigned>& exponents, long p);

/// Rank of a matrix over F_p by Gaussian elimination.
std::size_t rank_mod_p(const IntMatrix& a, long p);

}  // namespace prettygood
