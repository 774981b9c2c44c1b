#include "prettygood/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace prettygood {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        for (long v : r) {
            entries_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionError("row " + std::to_string(i) + " has length " +
                                 std::to_string(rows[i].size()) + ", expected " +
                                 std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            // mpz_class has no int64_t constructor on every platform
            m(i, j) = static_cast<long>(rows[i][j]);
        }
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionError("row " + std::to_string(i) + " has length " +
                                 std::to_string(rows[i].size()) + ", expected " +
                                 std::to_string(cols));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * cols);
    }
    return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
    return {entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_};
}

void IntMatrix::append_row(const std::vector<Integer>& r) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = r.size();
    }
    if (r.size() != cols_) {
        throw DimensionError("append_row: length mismatch");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
    ++rows_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

IntMatrix IntMatrix::submatrix_rows(std::size_t first, std::size_t count) const {
    IntMatrix s(count, cols_);
    std::copy(entries_.begin() + first * cols_, entries_.begin() + (first + count) * cols_,
              s.entries_.begin());
    return s;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        swap((*this)(a, j), (*this)(b, j));
    }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        swap((*this)(i, a), (*this)(i, b));
    }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) {
        return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(dst, j) += factor * (*this)(src, j);
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) {
        return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, dst) += factor * (*this)(i, src);
    }
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(i, j) = -(*this)(i, j);
    }
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, j) = -(*this)(i, j);
    }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionError("matrix difference: shapes differ");
    }
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) {
        c.entries_[k] -= b.entries_[k];
    }
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            out << (j ? "," : "") << (*this)(i, j).get_str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

// ---------------------------------------------------------------------------

std::size_t SmithForm::rank() const {
    return static_cast<std::size_t>(
        std::count_if(divisors.begin(), divisors.end(), [](const Integer& d) { return d != 0; }));
}

namespace {

// Position of the smallest nonzero |entry| in the block rows >= t, cols >= t.
bool smallest_nonzero(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& v = a(i, j);
            if (v == 0) {
                continue;
            }
            if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
                found = true;
                best = abs(v);
                pi = i;
                pj = j;
                if (best == 1) {
                    return true;
                }
            }
        }
    }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t limit = std::min(rows, cols);

    Integer q;
    for (std::size_t t = 0; t < limit; ++t) {
        std::size_t pi = 0;
        std::size_t pj = 0;
        if (!smallest_nonzero(a, t, pi, pj)) {
            break;
        }
        for (;;) {
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) {
                    continue;
                }
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                clean = clean && a(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) {
                    continue;
                }
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                clean = clean && a(t, j) == 0;
            }
            if (!clean) {
                smallest_nonzero(a, t, pi, pj);
                continue;
            }

            // Pivot must divide the rest of the block; otherwise fold the
            // offending row into row t and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
            pi = t;
            pj = t;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm result{std::move(u), std::move(v), {}};
    result.divisors.reserve(limit);
    for (std::size_t t = 0; t < limit; ++t) {
        result.divisors.push_back(a(t, t));
    }
    return result;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(rows);
    std::vector<std::size_t> pivots;

    Integer q;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (;;) {
            // smallest nonzero in column c at or below row r
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (h(i, c) != 0 && (best == rows || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0)) {
                    best = i;
                }
            }
            if (best == rows) {
                break;
            }
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) {
                    continue;
                }
                mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                clean = clean && h(i, c) == 0;
            }
            if (clean) {
                break;
            }
        }
        if (h(r, c) == 0) {
            continue;
        }
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t k = 0; k < r; ++k) {
            mpz_fdiv_q(q.get_mpz_t(), h(k, c).get_mpz_t(), h(r, c).get_mpz_t());
            h.add_row_multiple(k, r, -q);
            u.add_row_multiple(k, r, -q);
        }
        pivots.push_back(c);
        ++r;
    }
    return HermiteForm{std::move(u), std::move(h), std::move(pivots)};
}

std::size_t rank(const IntMatrix& m) {
    return hermite_normal_form(m).rank();
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) {
                ++swap_with;
            }
            if (swap_with == n) {
                return 0;
            }
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------

Integer FinAbGroup::order() const {
    if (!is_finite()) {
        throw std::logic_error("order of an infinite group");
    }
    return torsion_order();
}

Integer FinAbGroup::torsion_order() const {
    Integer n = 1;
    for (const auto& t : torsion) {
        n *= t;
    }
    return n;
}

std::vector<Integer> FinAbGroup::p_primary(long p) const {
    std::vector<Integer> parts;
    const Integer prime = p;
    for (const auto& t : torsion) {
        Integer part = 1;
        Integer rest = t;
        while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
            rest /= prime;
            part *= prime;
        }
        if (part > 1) {
            parts.push_back(part);
        }
    }
    return parts;
}

std::string FinAbGroup::to_string() const {
    std::string s;
    for (const auto& t : torsion) {
        s += (s.empty() ? "" : " + ") + ("Z/" + t.get_str());
    }
    if (free_rank > 0) {
        s += (s.empty() ? "" : " + ") + ("Z^" + std::to_string(free_rank));
    }
    return s.empty() ? "0" : s;
}

FinAbGroup quotient_group(std::size_t ambient_rank, const IntMatrix& generators) {
    if (generators.rows() > 0 && generators.cols() != ambient_rank) {
        throw DimensionError("quotient_group: generators have " +
                             std::to_string(generators.cols()) + " columns, ambient rank is " +
                             std::to_string(ambient_rank));
    }
    FinAbGroup g;
    g.free_rank = ambient_rank;
    if (generators.rows() == 0) {
        return g;
    }
    const SmithForm snf = smith_normal_form(generators);
    for (const auto& d : snf.divisors) {
        if (d == 0) {
            continue;
        }
        --g.free_rank;
        if (d > 1) {
            g.torsion.push_back(d);
        }
    }
    return g;
}

bool is_prime(long p) {
    if (p < 2) {
        return false;
    }
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

bool p_torsion_free(const FinAbGroup& g, long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    return std::none_of(g.torsion.begin(), g.torsion.end(),
                        [p](const Integer& t) { return mpz_divisible_ui_p(t.get_mpz_t(), p); });
}

std::vector<Integer> relative_divisors(const IntMatrix& sub, const IntMatrix& ambient) {
    if (sub.rows() > 0 && ambient.rows() > 0 && sub.cols() != ambient.cols()) {
        throw DimensionError("relative_divisors: lattices live in different spaces");
    }
    const Lattice lattice(ambient);
    if (sub.rows() == 0) {
        return {};
    }
    const IntMatrix coords = lattice.coordinates(sub);
    if (coords.cols() == 0) {
        return {};
    }
    std::vector<Integer> divisors;
    for (auto& d : smith_normal_form(coords).divisors) {
        if (d != 0) {
            divisors.push_back(std::move(d));
        }
    }
    return divisors;
}

IntMatrix express_in_rows(const IntMatrix& vectors, const IntMatrix& basis) {
    const HermiteForm hnf = hermite_normal_form(basis);
    if (hnf.rank() != basis.rows()) {
        throw DimensionError("express_in_rows: basis rows are dependent");
    }
    const Lattice lattice(basis);
    return lattice.coordinates(vectors) * hnf.transform;
}

// ---------------------------------------------------------------------------

Lattice::Lattice(const IntMatrix& generators) : dim_(generators.cols()) {
    HermiteForm hnf = hermite_normal_form(generators);
    basis_ = hnf.form.submatrix_rows(0, hnf.rank());
    pivots_ = std::move(hnf.pivot_cols);
}

bool Lattice::reduce(const std::vector<Integer>& v, std::vector<Integer>* coords) const {
    if (v.size() != dim_) {
        throw DimensionError("lattice membership: vector has wrong length");
    }
    std::vector<Integer> residual = v;
    if (coords != nullptr) {
        coords->assign(basis_.rows(), Integer(0));
    }
    Integer q;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const std::size_t pc = pivots_[i];
        if (residual[pc] == 0) {
            continue;
        }
        if (!mpz_divisible_p(residual[pc].get_mpz_t(), basis_(i, pc).get_mpz_t())) {
            return false;
        }
        mpz_divexact(q.get_mpz_t(), residual[pc].get_mpz_t(), basis_(i, pc).get_mpz_t());
        for (std::size_t j = pc; j < dim_; ++j) {
            residual[j] -= q * basis_(i, j);
        }
        if (coords != nullptr) {
            (*coords)[i] = q;
        }
    }
    return std::all_of(residual.begin(), residual.end(), [](const Integer& x) { return x == 0; });
}

bool Lattice::contains(const std::vector<Integer>& v) const {
    return reduce(v, nullptr);
}

std::vector<Integer> Lattice::coordinates(const std::vector<Integer>& v) const {
    std::vector<Integer> c;
    if (!reduce(v, &c)) {
        throw ContainmentError("vector is not in the lattice");
    }
    return c;
}

IntMatrix Lattice::coordinates(const IntMatrix& vectors) const {
    IntMatrix c(vectors.rows(), rank());
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
        std::vector<Integer> coords;
        if (!reduce(vectors.row(i), &coords)) {
            throw ContainmentError("row " + std::to_string(i) + " is not in the ambient lattice");
        }
        for (std::size_t j = 0; j < coords.size(); ++j) {
            c(i, j) = coords[j];
        }
    }
    return c;
}

}  // namespace prettygood
