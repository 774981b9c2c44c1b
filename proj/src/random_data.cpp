#include "prettygood/random_data.hpp"

#include <numeric>
#include <stdexcept>

namespace prettygood {

namespace {

long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::vector<Vector> to_vectors(const IntMatrix& m) {
    std::vector<Vector> out(m.rows(), Vector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_slong_p()) {
                throw std::overflow_error("coordinate does not fit in 64 bits");
            }
            out[i][j] = m(i, j).get_si();
        }
    }
    return out;
}

IntMatrix from_vectors(const std::vector<Vector>& v, std::size_t cols) {
    return IntMatrix::from_rows(v, cols);
}

}  // namespace

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = uniform(rng, -bound, bound);
        }
    }
    return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && uniform(rng, 0, 1) == 1) {
            u.negate_row(0);
        }
        return u;
    }
    for (std::size_t s = 0; s < steps; ++s) {
        const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (b >= a) {
            ++b;
        }
        switch (uniform(rng, 0, 5)) {
        case 0: u.swap_rows(a, b); break;
        case 1: u.negate_row(a); break;
        default: u.add_row_multiple(a, b, Integer(uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1)));
        }
    }
    return u;
}

RootDatum change_basis(const RootDatum& r, const IntMatrix& basis) {
    const std::size_t n = r.rank();
    const IntMatrix roots = express_in_rows(from_vectors(r.roots(), n), basis);
    const IntMatrix coroots = (basis * from_vectors(r.coroots(), n).transpose()).transpose();
    return RootDatum(n, to_vectors(roots), to_vectors(coroots));
}

RandomTypeA random_type_a_datum(Rng& rng, std::size_t max_rank, long max_index) {
    RandomTypeA out;
    const auto total = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_rank)));
    std::size_t used = 0;
    while (used < total) {
        const auto left = static_cast<long>(total - used);
        if (uniform(rng, 0, 4) == 0) {
            const auto t = static_cast<std::size_t>(uniform(rng, 1, std::min(2L, left)));
            out.torus_rank += t;
            used += t;
        } else {
            const auto n = static_cast<std::size_t>(uniform(rng, 1, std::min(4L, left)));
            out.a_ranks.push_back(n);
            used += n;
        }
    }

    RootDatum base = torus(0);
    for (const auto n : out.a_ranks) {
        base = direct_sum(base, adjoint({Series::A, n}));
    }
    base = direct_sum(base, torus(out.torus_rank));
    const std::size_t rank = base.rank();

    // glue vector g = sum c_i omega_1(A_{n_i}) + u / d, written as m * g with
    // m its order modulo the base lattice
    std::vector<std::vector<long>> numer;  // per coordinate: numerator over denominator
    long m = 1;
    std::vector<long> c(out.a_ranks.size());
    for (std::size_t i = 0; i < out.a_ranks.size(); ++i) {
        const long order = static_cast<long>(out.a_ranks[i]) + 1;
        c[i] = uniform(rng, 0, order - 1);
        m = std::lcm(m, order / std::gcd(order, c[i]));
    }
    const long d = uniform(rng, 1, max_index);
    std::vector<long> u(out.torus_rank);
    for (auto& x : u) {
        x = uniform(rng, 0, d - 1);
        m = std::lcm(m, d / std::gcd(d, x));
    }
    if (m > max_index) {
        // drop the torus fraction; the weight part alone has order <= 5
        std::fill(u.begin(), u.end(), 0);
        m = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const long order = static_cast<long>(out.a_ranks[i]) + 1;
            m = std::lcm(m, order / std::gcd(order, c[i]));
        }
        if (m > max_index) {
            std::fill(c.begin(), c.end(), 0);
            m = 1;
        }
    }

    std::vector<Integer> glue(rank, Integer(0));
    std::size_t col = 0;
    for (std::size_t i = 0; i < out.a_ranks.size(); ++i) {
        const long n = static_cast<long>(out.a_ranks[i]);
        for (long j = 1; j <= n; ++j, ++col) {
            // omega_1 = sum_j (n + 1 - j) / (n + 1) alpha_j
            glue[col] = Integer(c[i] * (n + 1 - j) * m / (n + 1));
        }
    }
    for (std::size_t k = 0; k < u.size(); ++k, ++col) {
        glue[col] = Integer(u[k] * m / d);
    }

    IntMatrix gens(0, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        std::vector<Integer> e(rank, Integer(0));
        e[i] = m;
        gens.append_row(e);
    }
    gens.append_row(glue);
    const HermiteForm h = hermite_normal_form(gens);
    const IntMatrix scaled_basis = h.form.submatrix_rows(0, rank);  // m * B

    // roots: c B = alpha  <=>  c (m B) = m alpha
    IntMatrix m_roots = from_vectors(base.roots(), rank);
    for (std::size_t i = 0; i < m_roots.rows(); ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            m_roots(i, j) *= m;
        }
    }
    const IntMatrix roots = express_in_rows(m_roots, scaled_basis);
    IntMatrix coroots = (scaled_basis * from_vectors(base.coroots(), rank).transpose()).transpose();
    for (std::size_t i = 0; i < coroots.rows(); ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            if (!mpz_divisible_ui_p(coroots(i, j).get_mpz_t(), static_cast<unsigned long>(m))) {
                throw std::logic_error("glue vector does not pair integrally with the coroots");
            }
            coroots(i, j) /= m;
        }
    }
    out.extension_index = m;
    const RootDatum glued(rank, to_vectors(roots), to_vectors(coroots));
    out.datum = change_basis(glued, random_unimodular(rng, rank, 3 * rank));
    return out;
}

}  // namespace prettygood
