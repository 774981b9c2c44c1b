#include "prettygood/certificate.hpp"

#include <algorithm>

#include "prettygood/primes.hpp"

namespace prettygood {

namespace {

// Z Phi / Z Phi' from the relative elementary divisors.
FinAbGroup root_lattice_quotient(const RootDatum& r, const RootSubset& s) {
    const IntMatrix ambient = root_matrix(r);
    FinAbGroup g;
    g.free_rank = rank(ambient);
    if (s.size() == 0) {
        return g;
    }
    for (const auto& d : relative_divisors(root_rows(r, s), ambient)) {
        --g.free_rank;
        if (d > 1) {
            g.torsion.push_back(d);
        }
    }
    return g;
}

WeylElement word_product(const RootDatum& r, const std::vector<std::size_t>& word) {
    WeylElement w{IntMatrix::identity(r.rank())};
    for (const auto i : word) {
        w = compose(w, reflection(r, i));
    }
    return w;
}

FinAbGroup fixed_group(const RootDatum& r, const WeylElement& s) {
    return quotient_group(r.rank(), (s.matrix - IntMatrix::identity(r.rank())).transpose());
}

std::optional<CoxeterCertificate> try_coxeter(const RootDatum& r, long p, bool on_dual) {
    const RootDatum side = on_dual ? dual(r) : r;
    CoxeterCertificate c;
    c.on_dual = on_dual;
    c.word = coxeter_word_typeA(side, CoxeterScope::type_a_components);
    if (c.word.empty()) {
        return std::nullopt;
    }
    const CoxeterTorsion t = coxeter_fixed_torsion(side, CoxeterScope::type_a_components);
    if (p_torsion_free(t.fixed_character_group, p)) {
        return std::nullopt;
    }
    c.element = t.element;
    c.fixed_character_group = t.fixed_character_group;
    return c;
}

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) {
        problems.push_back(what);
    }
}

struct Checker {
    const Certificate& cert;
    std::vector<std::string>& problems;

    void operator()(const PrettyGoodProof& pf) const {
        const DatumProfile prof = profile(cert.datum);
        const auto bad = bad_primes(prof);
        expect(problems, std::vector<long>(bad.begin(), bad.end()) == pf.bad_primes,
               "bad prime list does not match");
        expect(problems, prof.highest_coefficients == pf.highest_coefficients,
               "highest root coefficients do not match");
        expect(problems, !bad.contains(cert.p), "p is a bad prime");
        expect(problems, prof.character_mod_roots == pf.character_quotient,
               "X / Z Phi does not match");
        expect(problems, prof.cocharacter_mod_coroots == pf.cocharacter_quotient,
               "Y / Z Phi^vee does not match");
        expect(problems, p_torsion_free(pf.character_quotient, cert.p), "X / Z Phi has p-torsion");
        expect(problems, p_torsion_free(pf.cocharacter_quotient, cert.p),
               "Y / Z Phi^vee has p-torsion");
    }

    void operator()(const CenterTorsion& ct) const {
        expect(problems, character_quotient(cert.datum, all_roots(cert.datum)) == ct.character_quotient,
               "X / Z Phi does not match");
        expect(problems, !p_torsion_free(ct.character_quotient, cert.p), "X / Z Phi has no p-torsion");
    }

    void operator()(const BadPrimeSubsystem& bp) const {
        const RootDatum& r = cert.datum;
        const auto hr = highest_roots(r);
        if (bp.component >= hr.size() || bp.node >= hr[bp.component].coefficients.size()) {
            problems.push_back("component or node out of range");
            return;
        }
        expect(problems, hr[bp.component].coefficients[bp.node] == bp.coefficient,
               "coefficient does not match the highest root");
        expect(problems,
               mpz_divisible_ui_p(bp.coefficient.get_mpz_t(), static_cast<unsigned long>(cert.p)) != 0,
               "p does not divide the crossed coefficient");
        for (const auto i : bp.subset.indices) {
            if (i >= r.size()) {
                problems.push_back("subset index out of range");
                return;
            }
        }
        expect(problems, cross_out_node(r, bp.component, bp.node) == bp.subset,
               "subset is not the crossed-out subsystem");
        expect(problems, reflection_closure(r, bp.subset.indices) == bp.subset,
               "subset is not closed under its reflections");
        expect(problems, span_closure(r, bp.subset) == bp.subset, "subset is not span-closed");
        expect(problems, root_lattice_quotient(r, bp.subset) == bp.root_quotient,
               "Z Phi / Z Phi' does not match");
        expect(problems, character_quotient(r, bp.subset) == bp.character_quotient,
               "X / Z Phi' does not match");
        expect(problems, !p_torsion_free(bp.character_quotient, cert.p),
               "X / Z Phi' has no p-torsion");
    }

    void operator()(const CoxeterCertificate& cc) const {
        const RootDatum side = cc.on_dual ? dual(cert.datum) : cert.datum;
        for (const auto i : cc.word) {
            if (i >= side.size()) {
                problems.push_back("word index out of range");
                return;
            }
        }
        expect(problems, word_product(side, cc.word) == cc.element,
               "word product differs from the matrix");
        try {
            root_permutation(side, cc.element);
        } catch (const std::invalid_argument&) {
            problems.push_back("matrix does not permute the roots");
        }
        expect(problems, fixed_group(side, cc.element) == cc.fixed_character_group,
               "X / (s-1)X does not match");
        expect(problems, !p_torsion_free(cc.fixed_character_group, cert.p),
               "X / (s-1)X has no p-torsion");
    }
};

Json payload_json(const PrettyGoodProof& pf) {
    Json coeffs = Json::array();
    for (const auto& row : pf.highest_coefficients) {
        Json r = Json::array();
        for (const auto& c : row) {
            r.push_back(to_json(c));
        }
        coeffs.push_back(std::move(r));
    }
    return Json{{"bad_primes", pf.bad_primes},
                {"highest_coefficients", coeffs},
                {"character_quotient", to_json(pf.character_quotient)},
                {"cocharacter_quotient", to_json(pf.cocharacter_quotient)}};
}

Json payload_json(const CenterTorsion& ct) {
    return Json{{"character_quotient", to_json(ct.character_quotient)}};
}

Json payload_json(const BadPrimeSubsystem& bp) {
    return Json{{"component", bp.component},
                {"node", bp.node},
                {"coefficient", to_json(bp.coefficient)},
                {"subset", to_json(bp.subset)},
                {"root_quotient", to_json(bp.root_quotient)},
                {"character_quotient", to_json(bp.character_quotient)}};
}

Json payload_json(const CoxeterCertificate& cc) {
    return Json{{"side", cc.on_dual ? "dual" : "datum"},
                {"word", cc.word},
                {"matrix", to_json(cc.element.matrix)},
                {"fixed_character_group", to_json(cc.fixed_character_group)}};
}

}  // namespace

std::string Certificate::kind() const {
    static const char* const names[] = {"pretty-good-proof", "center-torsion", "bad-prime-subsystem",
                                        "coxeter-torsion"};
    return names[payload.index()];
}

Certificate build_certificate(const RootDatum& r, long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    const DatumProfile prof = profile(r);
    if (pretty_good(prof, p)) {
        const auto bad = bad_primes(prof);
        return {r, p,
                PrettyGoodProof{{bad.begin(), bad.end()}, prof.highest_coefficients,
                                prof.character_mod_roots, prof.cocharacter_mod_coroots}};
    }
    if (!p_torsion_free(prof.character_mod_roots, p)) {
        return {r, p, CenterTorsion{prof.character_mod_roots}};
    }
    if (const auto crossed = cross_out_for_prime(r, p)) {
        return {r, p,
                BadPrimeSubsystem{crossed->component, crossed->node, crossed->coefficient,
                                  crossed->subset, root_lattice_quotient(r, crossed->subset),
                                  character_quotient(r, crossed->subset)}};
    }
    for (const bool on_dual : {false, true}) {
        if (auto c = try_coxeter(r, p, on_dual)) {
            return {r, p, std::move(*c)};
        }
    }
    throw ClassificationGap("no certificate branch applies at p = " + std::to_string(p));
}

std::vector<std::string> verify_certificate(const Certificate& c) {
    std::vector<std::string> problems = validate(c.datum);
    if (!problems.empty()) {
        return problems;
    }
    if (!is_prime(c.p)) {
        return {std::to_string(c.p) + " is not prime"};
    }
    try {
        std::visit(Checker{c, problems}, c.payload);
    } catch (const std::exception& e) {
        problems.push_back(std::string("check failed: ") + e.what());
    }
    return problems;
}

Json to_json(const Certificate& c) {
    return Json{{"kind", c.kind()},
                {"datum", to_json(c.datum)},
                {"p", c.p},
                {"payload", std::visit([](const auto& pl) { return payload_json(pl); }, c.payload)}};
}

Certificate certificate_from_json(const Json& j) {
    try {
        const auto kind = j.at("kind").get<std::string>();
        const Json& pl = j.at("payload");
        Certificate c{datum_from_json(j.at("datum")), j.at("p").get<long>(), CenterTorsion{}};
        if (kind == "pretty-good-proof") {
            PrettyGoodProof pf;
            pf.bad_primes = pl.at("bad_primes").get<std::vector<long>>();
            for (const auto& row : pl.at("highest_coefficients")) {
                std::vector<Integer> r;
                for (const auto& x : row) {
                    r.push_back(integer_from_json(x));
                }
                pf.highest_coefficients.push_back(std::move(r));
            }
            pf.character_quotient = group_from_json(pl.at("character_quotient"));
            pf.cocharacter_quotient = group_from_json(pl.at("cocharacter_quotient"));
            c.payload = std::move(pf);
        } else if (kind == "center-torsion") {
            c.payload = CenterTorsion{group_from_json(pl.at("character_quotient"))};
        } else if (kind == "bad-prime-subsystem") {
            c.payload = BadPrimeSubsystem{pl.at("component").get<std::size_t>(),
                                          pl.at("node").get<std::size_t>(),
                                          integer_from_json(pl.at("coefficient")),
                                          subset_from_json(pl.at("subset")),
                                          group_from_json(pl.at("root_quotient")),
                                          group_from_json(pl.at("character_quotient"))};
        } else if (kind == "coxeter-torsion") {
            const auto side = pl.at("side").get<std::string>();
            if (side != "datum" && side != "dual") {
                throw JsonFormatError("coxeter side must be \"datum\" or \"dual\"");
            }
            c.payload = CoxeterCertificate{side == "dual", pl.at("word").get<std::vector<std::size_t>>(),
                                           WeylElement{matrix_from_json(pl.at("matrix"))},
                                           group_from_json(pl.at("fixed_character_group"))};
        } else {
            throw JsonFormatError("unknown certificate kind: " + kind);
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(std::string("bad certificate: ") + e.what());
    }
}

}  // namespace prettygood
