#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prettygood/intlin.hpp"
#include "prettygood/random_data.hpp"
#include "support/oracles.hpp"

using namespace prettygood;

namespace {

IntMatrix diag(const std::vector<Integer>& d, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

void check_smith(const IntMatrix& m) {
    const SmithForm f = smith_normal_form(m);
    REQUIRE(f.divisors.size() == std::min(m.rows(), m.cols()));
    CHECK(f.left * m * f.right == diag(f.divisors, m.rows(), m.cols()));
    CHECK(abs(determinant(f.left)) == 1);
    CHECK(abs(determinant(f.right)) == 1);
    for (std::size_t i = 0; i + 1 < f.divisors.size(); ++i) {
        CHECK(f.divisors[i] >= 0);
        if (f.divisors[i] != 0) {
            CHECK(mpz_divisible_p(f.divisors[i + 1].get_mpz_t(), f.divisors[i].get_mpz_t()));
        } else {
            CHECK(f.divisors[i + 1] == 0);
        }
    }
    std::vector<Integer> nonzero;
    for (const auto& d : f.divisors) {
        if (d != 0) {
            nonzero.push_back(d);
        }
    }
    CHECK(nonzero == oracle::determinantal_divisors(m));
}

}  // namespace

TEST_CASE("smith form of a 2x2 example") {
    const IntMatrix m{{2, 4}, {6, 8}};
    const SmithForm f = smith_normal_form(m);
    CHECK(f.divisors == std::vector<Integer>{2, 4});
    check_smith(m);
}

TEST_CASE("smith form of empty and degenerate shapes") {
    const SmithForm empty = smith_normal_form(IntMatrix(0, 0));
    CHECK(empty.divisors.empty());
    CHECK(empty.rank() == 0);
    check_smith(IntMatrix(3, 0));
    check_smith(IntMatrix(2, 3));
    check_smith(IntMatrix{{0, 0, 5}});
    check_smith(IntMatrix{{-3}, {6}, {9}});
}

TEST_CASE("smith form on random matrices against the minors oracle") {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        const auto r = 1 + rng() % 6;
        const auto c = 1 + rng() % 6;
        check_smith(random_matrix(rng, r, c, 9));
    }
}

TEST_CASE("hermite form spans the same lattice") {
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        const IntMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 6);
        const HermiteForm h = hermite_normal_form(m);
        CHECK(h.transform * m == h.form);
        CHECK(abs(determinant(h.transform)) == 1);
        CHECK(h.rank() == oracle::rank_q(m));
        for (std::size_t k = 0; k < h.rank(); ++k) {
            const std::size_t c = h.pivot_cols[k];
            CHECK(h.form(k, c) > 0);
            for (std::size_t above = 0; above < k; ++above) {
                CHECK(h.form(above, c) >= 0);
                CHECK(h.form(above, c) < h.form(k, c));
            }
        }
    }
}

TEST_CASE("rank and determinant") {
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionError);
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto n = 1 + rng() % 6;
        const IntMatrix m = random_matrix(rng, n, n, 5);
        std::vector<std::vector<Integer>> rows;
        for (std::size_t r = 0; r < n; ++r) {
            rows.push_back(m.row(r));
        }
        CHECK(determinant(m) == oracle::det(rows));
    }
}

TEST_CASE("quotient groups") {
    SUBCASE("Z^2 / <(2,0),(0,3)> is cyclic of order 6") {
        const FinAbGroup g = quotient_group(2, IntMatrix{{2, 0}, {0, 3}});
        CHECK(g.torsion == std::vector<Integer>{6});
        CHECK(g.free_rank == 0);
        CHECK(g.order() == 6);
    }
    SUBCASE("Z^3 / <(1,1,1)> is free of rank 2") {
        const FinAbGroup g = quotient_group(3, IntMatrix{{1, 1, 1}});
        CHECK(g.torsion.empty());
        CHECK(g.free_rank == 2);
        CHECK(!g.is_finite());
    }
    SUBCASE("Z^2 / <(2,2)> is Z + Z/2") {
        const FinAbGroup g = quotient_group(2, IntMatrix{{2, 2}});
        CHECK(g.torsion == std::vector<Integer>{2});
        CHECK(g.free_rank == 1);
        CHECK(!p_torsion_free(g, 2));
        CHECK(p_torsion_free(g, 3));
    }
    SUBCASE("no generators") {
        const FinAbGroup g = quotient_group(2, IntMatrix(0, 2));
        CHECK(g.free_rank == 2);
        CHECK(quotient_group(0, IntMatrix(0, 0)).is_trivial());
    }
    CHECK_THROWS_AS(quotient_group(3, IntMatrix{{1, 2}}), DimensionError);
    CHECK_THROWS(p_torsion_free(FinAbGroup{}, 4));
}

TEST_CASE("p-primary parts") {
    const FinAbGroup g = quotient_group(2, IntMatrix{{12, 0}, {0, 18}});
    CHECK(g.torsion == std::vector<Integer>{6, 36});
    CHECK(g.p_primary(2) == std::vector<Integer>{2, 4});
    CHECK(g.p_primary(3) == std::vector<Integer>{3, 9});
    CHECK(g.p_primary(5).empty());
    CHECK(oracle::has_p_torsion_bruteforce(g, 3));
}

TEST_CASE("relative divisors") {
    CHECK(relative_divisors(IntMatrix{{2, 0}, {0, 3}}, IntMatrix::identity(2)) ==
          std::vector<Integer>{1, 6});
    // ambient basis (1,1),(0,2); sub generated by (2,2)
    CHECK(relative_divisors(IntMatrix{{2, 2}}, IntMatrix{{1, 1}, {0, 2}}) ==
          std::vector<Integer>{2});
    CHECK(relative_divisors(IntMatrix{{0, 4}}, IntMatrix{{1, 1}, {0, 2}}) ==
          std::vector<Integer>{2});
    CHECK_THROWS_AS(relative_divisors(IntMatrix{{1, 0}}, IntMatrix{{2, 0}, {0, 1}}),
                    ContainmentError);
}

TEST_CASE("lattice membership and coordinates") {
    const Lattice l(IntMatrix{{2, 0}, {1, 1}});
    CHECK(l.rank() == 2);
    CHECK(l.contains({3, 1}));
    CHECK(!l.contains({1, 0}));
    const IntMatrix v{{3, 1}, {0, 2}};
    const IntMatrix b{{2, 0}, {1, 1}};
    const IntMatrix c = express_in_rows(v, b);
    CHECK(c * b == v);
    CHECK_THROWS_AS(express_in_rows(IntMatrix{{1, 0}}, b), ContainmentError);
    CHECK_THROWS_AS(express_in_rows(v, IntMatrix{{1, 1}, {2, 2}}), DimensionError);
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(91));
}
