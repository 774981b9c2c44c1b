#pragma once

// Exact integer linear algebra over Z: Smith and Hermite normal forms,
// lattice membership, and finite abelian quotients of lattices.
//
// Everything is carried out in unbounded integers (GMP). Matrices act on row
// vectors: a lattice is the row span of its generator matrix.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace prettygood {

using Integer = mpz_class;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ContainmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::vector<Integer> row(std::size_t i) const;
    void append_row(const std::vector<Integer>& r);

    IntMatrix transpose() const;
    IntMatrix submatrix_rows(std::size_t first, std::size_t count) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    // col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Smith form U*M*V = diag(d_1, ..., d_t, 0, ...) with U, V unimodular and
/// d_1 | d_2 | ... ; zeros (rank deficiency) come last. `divisors` has
/// min(rows, cols) entries.
struct SmithForm {
    IntMatrix left;
    IntMatrix right;
    std::vector<Integer> divisors;

    std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form H = U*M: echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows come last.
struct HermiteForm {
    IntMatrix transform;
    IntMatrix form;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

HermiteForm hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
Integer determinant(const IntMatrix& m);

/// A finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k in
/// invariant-factor form (every t_i > 1, t_i | t_{i+1}).
struct FinAbGroup {
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;

    bool is_finite() const noexcept { return free_rank == 0; }
    bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
    Integer order() const;                          // requires is_finite()
    Integer torsion_order() const;
    /// Invariant factors of the p-primary part (p-parts of torsion > 1).
    std::vector<Integer> p_primary(long p) const;

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
    std::string to_string() const;
};

/// Z^ambient_rank modulo the row span of `generators`.
FinAbGroup quotient_group(std::size_t ambient_rank, const IntMatrix& generators);

bool is_prime(long p);

/// True iff no invariant factor is divisible by p. Throws if p is not prime.
bool p_torsion_free(const FinAbGroup& g, long p);

/// Elementary divisors of the row lattice of `sub` inside the row lattice of
/// `ambient`: the nonzero d_i with a basis e_i of the ambient lattice such
/// that d_i e_i span `sub`. Throws ContainmentError if sub is not contained.
std::vector<Integer> relative_divisors(const IntMatrix& sub, const IntMatrix& ambient);

/// Integer C with C * basis == vectors, for a basis with independent rows.
/// Throws DimensionError on dependent rows, ContainmentError when some row
/// of `vectors` is not an integral combination.
IntMatrix express_in_rows(const IntMatrix& vectors, const IntMatrix& basis);

/// The lattice spanned by a set of integer row vectors, kept in Hermite form.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(const IntMatrix& generators);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return basis_.rows(); }
    const IntMatrix& basis() const noexcept { return basis_; }

    bool contains(const std::vector<Integer>& v) const;
    /// Coordinates c with c * basis() == v; throws ContainmentError otherwise.
    std::vector<Integer> coordinates(const std::vector<Integer>& v) const;
    /// Row-wise coordinates of `vectors` in basis().
    IntMatrix coordinates(const IntMatrix& vectors) const;

private:
    bool reduce(const std::vector<Integer>& v, std::vector<Integer>* coords) const;

    std::size_t dim_ = 0;
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace prettygood
