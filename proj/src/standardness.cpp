#include "prettygood/standardness.hpp"

#include <algorithm>

#include "prettygood/primes.hpp"

namespace prettygood {

std::string Verdict::text() const {
    return essentially_standard ? "essentially standard" : "not essentially standard";
}

Verdict classify(const RootDatum& r, long p) {
    if (p != 0 && !is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is neither 0 nor prime");
    }
    return {p, p == 0 || pretty_good(r, p)};
}

Decomposition decompose(const RootDatum& r, long p) {
    const DatumProfile prof = profile(r);
    if (!is_good(prof, p)) {
        throw BadPrime(std::to_string(p) + " is a bad prime for " +
                       cartan_type_name(prof.components));
    }
    Decomposition d;
    d.p = p;
    d.torus_rank = prof.rank - prof.root_lattice_rank;
    for (const auto& c : prof.components) {
        const bool divides = c.type.series == Series::A &&
                             (c.type.rank + 1) % static_cast<std::size_t>(p) == 0;
        if (divides) {
            d.a_blocks.push_back(c.type.rank);
        } else {
            d.vg_blocks.push_back(c.type);
        }
    }
    d.witness_ok = d.torus_rank >= d.a_blocks.size();
    d.torus_augmentation = d.witness_ok ? 0 : d.a_blocks.size() - d.torus_rank;
    return d;
}

std::size_t rank_mod_p(const IntMatrix& a, long p) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Integer v;
            mpz_fdiv_r_ui(v.get_mpz_t(), a(i, j).get_mpz_t(), static_cast<unsigned long>(p));
            m[i][j] = v.get_si();
        }
    }
    auto inverse = [p](long x) {
        long result = 1;
        long base = x;
        for (long e = p - 2; e > 0; e >>= 1) {
            if (e & 1) {
                result = static_cast<long>((static_cast<__int128>(result) * base) % p);
            }
            base = static_cast<long>((static_cast<__int128>(base) * base) % p);
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(m[piv], m[r]);
        const long inv = inverse(m[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            const long factor = static_cast<long>((static_cast<__int128>(m[i][c]) * inv) % p);
            for (std::size_t j = c; j < cols; ++j) {
                const auto t = (m[i][j] - static_cast<__int128>(factor) * m[r][j]) % p;
                m[i][j] = static_cast<long>(t < 0 ? t + p : t);
            }
        }
        ++r;
    }
    return r;
}

GluingCheck check_gluing(const IntMatrix& a, const std::vector<unsigned>& exponents, long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    const std::size_t n = exponents.size();
    if (a.rows() != n || a.cols() < n) {
        throw DimensionError("gluing matrix must be n x r with n = #exponents and r >= n");
    }
    if (std::any_of(exponents.begin(), exponents.end(), [](unsigned s) { return s == 0; })) {
        throw std::invalid_argument("gluing exponents must be positive");
    }
    GluingCheck g{a, exponents, p, {}, 0, false};
    g.divisors = smith_normal_form(a).divisors;
    const bool by_divisors = std::all_of(g.divisors.begin(), g.divisors.end(), [p](const Integer& d) {
        return d != 0 && !mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p));
    });
    g.rank_mod_p = rank_mod_p(a, p);
    const bool by_rank = g.rank_mod_p == n;

    // Z^n / (A Z^r + diag(p^s_i) Z^n) must vanish
    IntMatrix gens = a.transpose();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> row(n, Integer(0));
        mpz_ui_pow_ui(row[i].get_mpz_t(), static_cast<unsigned long>(p), exponents[i]);
        gens.append_row(row);
    }
    const bool by_quotient = quotient_group(n, gens).is_trivial();

    if (by_divisors != by_rank || by_rank != by_quotient) {
        throw std::logic_error("gluing surjectivity routes disagree");
    }
    g.surjective = by_rank;
    return g;
}

}  // namespace prettygood
