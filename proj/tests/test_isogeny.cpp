#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "prettygood/isogeny.hpp"
#include "prettygood/primes.hpp"

using namespace prettygood;

namespace {

Isogeny times(long k) { return {preset("AD(A1)"), preset("SC(A1)"), IntMatrix{{k}}}; }

Isogeny identity_on(const RootDatum& r) { return {r, r, IntMatrix::identity(r.rank())}; }

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
    return std::any_of(v.begin(), v.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate_isogeny(times(2)).empty());
    CHECK(validate_isogeny(identity_on(preset("SC(B3)"))).empty());
    CHECK(mentions(validate_isogeny(times(3)), "not in the target roots"));
    CHECK(!validate_isogeny(times(0)).empty());
    CHECK(!validate_isogeny({preset("GL(2)"), preset("GL(2)"), IntMatrix{{1, 0}}}).empty());
    // x2 sends roots to roots but the dual map breaks the coroots
    CHECK(mentions(validate_isogeny({preset("GL(2)"), preset("GL(2)"), IntMatrix{{2, 0}, {0, 2}}}),
                   "root"));
    CHECK_THROWS_AS(cokernel(times(3)), InvalidIsogeny);
}

TEST_CASE("cokernels") {
    CHECK(cokernel(times(2)).torsion == std::vector<Integer>{2});
    CHECK(cokernel(identity_on(preset("SC(E6)"))).is_trivial());
    const Isogeny diag{preset("Torus(2)"), preset("Torus(2)"), IntMatrix{{1, 0}, {0, 3}}};
    CHECK(cokernel(diag).torsion == std::vector<Integer>{3});
    CHECK(dual_cokernel(diag).torsion == std::vector<Integer>{3});
}

TEST_CASE("separability") {
    CHECK(separable_at(times(2), 3));
    CHECK(!separable_at(times(2), 2));
    for (const long p : {2L, 3L, 5L}) {
        CHECK(separable_at(identity_on(preset("GL(3)")), p));
    }
}

TEST_CASE("pretty-good transfer") {
    const Transfer at3 = transfer_pretty_good(times(2), 3);
    CHECK(at3.applies);
    CHECK(at3.source_pretty_good);
    CHECK(at3.target_pretty_good);
    const Transfer at2 = transfer_pretty_good(times(2), 2);
    CHECK(!at2.applies);
    CHECK(!at2.source_pretty_good);
    CHECK(!at2.target_pretty_good);
    for (const long p : {2L, 3L, 5L}) {
        const Transfer t = transfer_pretty_good(identity_on(preset("SC(G2)")), p);
        CHECK(t.applies);
        CHECK(t.source_pretty_good == t.target_pretty_good);
    }
}

TEST_CASE("natural isogenies of every type") {
    for (const auto& name : standard_presets(8)) {
        if (name.rfind("SC(", 0) != 0) {
            continue;
        }
        CAPTURE(name);
        const auto type = parse_cartan_component(name.substr(3, name.size() - 4));
        const Isogeny f = natural_isogeny(type);
        CHECK(validate_isogeny(f).empty());
        CHECK(cokernel(f).order() == dual_cokernel(f).order());
        CHECK(cokernel(f) == character_quotient(f.target, all_roots(f.target)));
        for (const long p : {2L, 3L, 5L, 7L}) {
            const Transfer t = transfer_pretty_good(f, p);
            if (type.series == Series::A && (type.rank + 1) % static_cast<std::size_t>(p) != 0) {
                CHECK(t.applies);
                CHECK(t.source_pretty_good == t.target_pretty_good);
            }
        }
    }
}

TEST_CASE("composition") {
    const Isogeny f = times(2);
    const Isogeny g = identity_on(preset("SC(A1)"));
    const Isogeny h = compose(f, g);
    CHECK(validate_isogeny(h).empty());
    CHECK(cokernel(h).order() == cokernel(f).order() * cokernel(g).order());
    CHECK_THROWS(compose(g, f));
    const Isogeny d1{preset("Torus(2)"), preset("Torus(2)"), IntMatrix{{1, 0}, {0, 3}}};
    const Isogeny d2{preset("Torus(2)"), preset("Torus(2)"), IntMatrix{{2, 1}, {0, 1}}};
    const Isogeny d = compose(d1, d2);
    CHECK(cokernel(d).order() == 6);
}
