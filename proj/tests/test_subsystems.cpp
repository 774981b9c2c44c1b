#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prettygood/random_data.hpp"
#include "prettygood/subsystems.hpp"
#include "support/oracles.hpp"

using namespace prettygood;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

FinAbGroup root_quotient(const RootDatum& r, const RootSubset& s) {
    // Z Phi / Z Phi' through relative divisors
    FinAbGroup g;
    const IntMatrix ambient = root_matrix(r);
    g.free_rank = oracle::rank_q(ambient);
    for (const auto& d : relative_divisors(root_rows(r, s), ambient)) {
        --g.free_rank;
        if (d > 1) {
            g.torsion.push_back(d);
        }
    }
    return g;
}

Integer p_part(Integer m, long p) {
    Integer out = 1;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        m /= p;
        out *= p;
    }
    return out;
}

bool is_permutation(const std::vector<std::size_t>& v) {
    return std::set<std::size_t>(v.begin(), v.end()).size() == v.size();
}

}  // namespace

TEST_CASE("span closure") {
    const RootDatum a1 = preset("SC(A1)");
    CHECK(span_closure(a1, RootSubset{{0}}) == all_roots(a1));
    for (const char* name : {"SC(B3)", "AD(G2)", "GL(4)"}) {
        const RootDatum r = preset(name);
        CHECK(span_closure(r, all_roots(r)) == all_roots(r));
        const RootSubset s{{0, 2}};
        const RootSubset c = span_closure(r, s);
        CHECK(span_closure(r, c) == c);
        for (const auto i : s.indices) {
            CHECK(c.contains(i));
        }
        CHECK(character_quotient(r, s) == character_quotient(r, c));
    }
}

TEST_CASE("long roots of G2 span an A2 subsystem") {
    const RootDatum g2 = preset("SC(G2)");
    // beta is long iff its coroot pairs to at most 1 in absolute value with every
    // root other than +-beta
    std::vector<std::size_t> longs;
    for (std::size_t i = 0; i < g2.size(); ++i) {
        bool is_long = true;
        for (std::size_t j = 0; j < g2.size(); ++j) {
            const auto c = pairing(g2.root(j), g2.coroot(i));
            if (c != 2 && c != -2 && (c > 1 || c < -1)) {
                is_long = false;
            }
        }
        if (is_long) {
            longs.push_back(i);
        }
    }
    REQUIRE(longs.size() == 6);
    const RootSubset pair{{longs[0], longs[1]}};
    const RootSubset closed = span_closure(g2, pair);
    CHECK(closed.size() == 6);
    CHECK(closed == RootSubset(longs));
    CHECK(components(g2).front().type.name() == "G2");
}

TEST_CASE("highest root coefficients match the catalog") {
    for (const auto& name : oracle::irreducible_types(8)) {
        CAPTURE(name);
        const auto f = oracle::facts(name);
        const RootDatum r = simply_connected(parse_cartan_component(name));
        const auto hr = highest_roots(r);
        REQUIRE(hr.size() == 1);
        std::vector<Integer> expect(f.highest_coefficients.begin(), f.highest_coefficients.end());
        if (name == "B2") {
            expect = ints({2, 1});  // read as C2
        }
        CHECK(hr[0].coefficients == expect);
    }
    CHECK(highest_roots(preset("SC(A2)"))[0].coefficients == ints({1, 1}));
    CHECK(highest_roots(preset("SC(G2)"))[0].coefficients == ints({3, 2}));
    CHECK(highest_roots(preset("SC(C2)"))[0].coefficients == ints({2, 1}));
    CHECK(highest_roots(preset("Torus(2)")).empty());
}

TEST_CASE("crossing out a node") {
    SUBCASE("G2 at the coefficient-2 node") {
        const RootDatum g2 = preset("SC(G2)");
        const RootSubset s = cross_out_node(g2, 0, 1);
        CHECK(s.size() == 4);  // A1 x A1
        const FinAbGroup q = root_quotient(g2, s);
        CHECK(q.torsion == ints({2}));
    }
    SUBCASE("C2 at the coefficient-2 node") {
        const RootDatum c2 = preset("SC(C2)");
        const RootSubset s = cross_out_node(c2, 0, 0);
        CHECK(root_quotient(c2, s).torsion == ints({2}));
    }
    SUBCASE("type A nodes give torsion-free quotients") {
        for (const char* name : {"SC(A1)", "SC(A3)", "AD(A4)", "GL(4)"}) {
            const RootDatum r = preset(name);
            const auto n = components(r).front().simple.size();
            for (std::size_t node = 0; node < n; ++node) {
                CHECK(root_quotient(r, cross_out_node(r, 0, node)).torsion.empty());
            }
        }
    }
    CHECK_THROWS(cross_out_node(preset("SC(A2)"), 1, 0));
    CHECK_THROWS(cross_out_node(preset("SC(A2)"), 0, 2));
}

TEST_CASE("crossed torsion is the p-part of the coefficient") {
    for (const auto& name : oracle::irreducible_types(8)) {
        const auto f = oracle::facts(name);
        for (const RootDatum& r : {simply_connected(parse_cartan_component(name)),
                                   adjoint(parse_cartan_component(name))}) {
            const auto hr = highest_roots(r);
            for (const long p : f.bad_primes) {
                for (std::size_t node = 0; node < hr[0].coefficients.size(); ++node) {
                    const Integer m = hr[0].coefficients[node];
                    if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
                        continue;
                    }
                    CAPTURE(name);
                    CAPTURE(node);
                    const FinAbGroup q = root_quotient(r, cross_out_node(r, 0, node));
                    CHECK(q.p_primary(p) == std::vector<Integer>{p_part(m, p)});
                }
            }
        }
    }
    const auto crossed = cross_out_for_prime(preset("SC(E8)"), 5);
    REQUIRE(crossed.has_value());
    CHECK(crossed->coefficient == 5);
    CHECK(!cross_out_for_prime(preset("SC(E8)"), 7).has_value());
}

TEST_CASE("reflections") {
    CHECK(reflection(preset("SC(A1)"), 0).matrix == IntMatrix{{-1}});
    CHECK(reflection(preset("GL(2)"), 0).matrix == IntMatrix{{0, 1}, {1, 0}});
    for (const char* name : {"SC(B3)", "AD(F4)", "GL(3)", "Sum(SC(G2),AD(A2))"}) {
        const RootDatum r = preset(name);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const WeylElement s = reflection(r, i);
            CHECK(compose(s, s).matrix == IntMatrix::identity(r.rank()));
            CHECK(abs(determinant(s.matrix)) == 1);
            const auto perm = root_permutation(r, s);
            CHECK(is_permutation(perm));
            CHECK(perm[i] == *r.find_root(subtract_multiple(Vector(r.rank(), 0), 1, r.root(i))));
        }
    }
    CHECK_THROWS_AS(root_permutation(preset("SC(A2)"), WeylElement{IntMatrix{{2, 0}, {0, 1}}}),
                    std::invalid_argument);
}

TEST_CASE("type A coxeter elements") {
    CHECK(coxeter_element_typeA(preset("SC(A1)")).matrix == IntMatrix{{-1}});
    CHECK(coxeter_element_typeA(preset("GL(2)")).matrix == IntMatrix{{0, 1}, {1, 0}});
    const RootDatum a2 = preset("SC(A2)");
    const WeylElement s = coxeter_element_typeA(a2);
    const auto word = coxeter_word_typeA(a2);
    REQUIRE(word.size() == 2);
    CHECK(s == compose(reflection(a2, word[0]), reflection(a2, word[1])));
    CHECK(compose(s, compose(s, s)).matrix == IntMatrix::identity(2));
    CHECK(compose(s, s).matrix != IntMatrix::identity(2));
    CHECK(coxeter_closed_form(a2) == s);
    CHECK_THROWS_AS(coxeter_element_typeA(preset("SC(B2)")), NonTypeA);
    CHECK(coxeter_element_typeA(preset("Sum(SC(B2),SC(A2))"), CoxeterScope::type_a_components).matrix.rows() == 4);
}

TEST_CASE("coxeter fixed-point groups") {
    const CoxeterTorsion sl2 = coxeter_fixed_torsion(preset("SC(A1)"));
    CHECK(sl2.fixed_character_group.torsion == ints({2}));
    CHECK(sl2.fixed_character_group.free_rank == 0);
    CHECK(sl2.image_divisors == ints({1}));
    const CoxeterTorsion gl2 = coxeter_fixed_torsion(preset("GL(2)"));
    CHECK(gl2.fixed_character_group.torsion.empty());
    CHECK(gl2.fixed_character_group.free_rank == 1);
    const CoxeterTorsion pgl2 = coxeter_fixed_torsion(preset("AD(A1)"));
    CHECK(pgl2.fixed_character_group.torsion == ints({2}));
    CHECK(pgl2.image_divisors == pgl2.coroot_divisors);
}

TEST_CASE("coxeter identity on random type A data") {
    Rng rng(99);
    int nontrivial = 0;
    for (int i = 0; i < 100; ++i) {
        const RandomTypeA gen = random_type_a_datum(rng, 6);
        const RootDatum& r = gen.datum;
        CAPTURE(i);
        REQUIRE(validate(r).empty());
        nontrivial += gen.extension_index > 1;
        if (r.size() == 0) {
            continue;
        }
        const CoxeterTorsion t = coxeter_fixed_torsion(r);
        CHECK(t.image_divisors == t.coroot_divisors);
        CHECK(coxeter_closed_form(r) == t.element);
        const FinAbGroup y = cocharacter_quotient(r, all_roots(r));
        for (const long p : {2L, 3L, 5L}) {
            if (!p_torsion_free(y, p)) {
                CHECK(!p_torsion_free(t.fixed_character_group, p));
            }
        }
    }
    CHECK(nontrivial > 20);
}
