#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace oracle {

Integer det(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) {
                ++s;
            }
            if (s == n) {
                return 0;
            }
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer g = 0;
        std::vector<std::size_t> rows(k);
        std::iota(rows.begin(), rows.end(), 0);
        do {
            std::vector<std::size_t> cols(k);
            std::iota(cols.begin(), cols.end(), 0);
            do {
                std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        sub[i][j] = m(rows[i], cols[j]);
                    }
                }
                const Integer d = det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
        if (g == 0) {
            break;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::size_t rank_q(const IntMatrix& m) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            a[i][j] = m(i, j);
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t s = r;
        while (s < m.rows() && a[s][c] == 0) {
            ++s;
        }
        if (s == m.rows()) {
            continue;
        }
        std::swap(a[s], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Integer f = a[i][c];
            for (std::size_t j = 0; j < m.cols(); ++j) {
                a[i][j] = a[i][j] * a[r][c] - f * a[r][j];
            }
        }
        ++r;
    }
    return r;
}

TypeFacts facts(const std::string& type) {
    const char s = type.at(0);
    const long n = std::stol(type.substr(1));
    const auto un = static_cast<std::size_t>(n);
    TypeFacts f;
    switch (s) {
    case 'A':
        f = {un * (un + 1), {}, std::vector<long>(un, 1), {}};
        if (n + 1 > 1) {
            f.fundamental_group = {n + 1};
        }
        break;
    case 'B':
        f = {2 * un * un, {2}, std::vector<long>(un, 2), {2}};
        f.highest_coefficients[0] = 1;
        break;
    case 'C':
        f = {2 * un * un, {2}, std::vector<long>(un, 2), {2}};
        f.highest_coefficients[un - 1] = 1;
        break;
    case 'D':
        f = {2 * un * (un - 1), {2}, std::vector<long>(un, 2), {}};
        f.highest_coefficients[0] = 1;
        f.highest_coefficients[un - 2] = 1;
        f.highest_coefficients[un - 1] = 1;
        f.fundamental_group = n % 2 == 0 ? std::vector<long>{2, 2} : std::vector<long>{4};
        break;
    case 'E':
        if (n == 6) {
            f = {72, {2, 3}, {1, 2, 2, 3, 2, 1}, {3}};
        } else if (n == 7) {
            f = {126, {2, 3}, {2, 2, 3, 4, 3, 2, 1}, {2}};
        } else {
            f = {240, {2, 3, 5}, {2, 3, 4, 6, 5, 4, 3, 2}, {}};
        }
        break;
    case 'F':
        f = {48, {2, 3}, {2, 3, 4, 2}, {}};
        break;
    case 'G':
        f = {12, {2, 3}, {3, 2}, {}};
        break;
    default:
        throw std::invalid_argument("unknown type " + type);
    }
    return f;
}

std::vector<std::string> irreducible_types(std::size_t max_rank) {
    std::vector<std::string> out;
    for (std::size_t n = 1; n <= max_rank; ++n) {
        out.push_back("A" + std::to_string(n));
    }
    for (std::size_t n = 2; n <= max_rank; ++n) {
        out.push_back("B" + std::to_string(n));
        out.push_back("C" + std::to_string(n));
    }
    for (std::size_t n = 4; n <= max_rank; ++n) {
        out.push_back("D" + std::to_string(n));
    }
    for (std::size_t n = 6; n <= std::min<std::size_t>(8, max_rank); ++n) {
        out.push_back("E" + std::to_string(n));
    }
    if (max_rank >= 4) {
        out.push_back("F4");
    }
    if (max_rank >= 2) {
        out.push_back("G2");
    }
    return out;
}

bool has_p_torsion_bruteforce(const prettygood::FinAbGroup& g, long p) {
    // an element of order p exists iff p divides the torsion order
    Integer order = 1;
    for (const auto& t : g.torsion) {
        order *= t;
    }
    return mpz_divisible_ui_p(order.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace oracle
