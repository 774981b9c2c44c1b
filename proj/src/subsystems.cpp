#include "prettygood/subsystems.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace prettygood {

namespace {

std::vector<Integer> to_integers(const Vector& v) {
    std::vector<Integer> out;
    out.reserve(v.size());
    for (auto x : v) {
        out.emplace_back(static_cast<long>(x));
    }
    return out;
}

IntMatrix rows_of(const RootDatum& r, const std::vector<std::size_t>& idx, bool coroots) {
    IntMatrix m(idx.size(), r.rank());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const Vector& v = coroots ? r.coroot(idx[k]) : r.root(idx[k]);
        for (std::size_t j = 0; j < r.rank(); ++j) {
            m(k, j) = static_cast<long>(v[j]);
        }
    }
    return m;
}

}  // namespace

RootSubset span_closure(const RootDatum& r, const RootSubset& s) {
    const Lattice lattice(root_rows(r, s));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (s.contains(i) || lattice.contains(to_integers(r.root(i)))) {
            out.push_back(i);
        }
    }
    return RootSubset(std::move(out));
}

std::vector<std::vector<Integer>> simple_coordinates(const RootDatum& r, const Component& comp) {
    const IntMatrix coords =
        express_in_rows(rows_of(r, comp.roots, false), rows_of(r, comp.simple, false));
    std::vector<std::vector<Integer>> out;
    out.reserve(coords.rows());
    for (std::size_t i = 0; i < coords.rows(); ++i) {
        out.push_back(coords.row(i));
    }
    return out;
}

std::vector<HighestRoot> highest_roots(const RootDatum& r) {
    const auto comps = components(r);
    std::vector<HighestRoot> out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto coords = simple_coordinates(r, comps[c]);
        HighestRoot best{c, 0, {}};
        Integer best_height = -1;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            const Integer height = std::accumulate(coords[k].begin(), coords[k].end(), Integer(0));
            if (height > best_height) {
                best_height = height;
                best.root = comps[c].roots[k];
                best.coefficients = coords[k];
            }
        }
        // the highest root dominates every root coefficientwise
        for (const auto& v : coords) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (v[j] > best.coefficients[j]) {
                    throw NotARootSystem("no dominating highest root in component " +
                                         comps[c].type.name());
                }
            }
        }
        out.push_back(std::move(best));
    }
    return out;
}

RootSubset reflection_closure(const RootDatum& r, const std::vector<std::size_t>& generators) {
    std::set<std::size_t> seen(generators.begin(), generators.end());
    std::deque<std::size_t> work(seen.begin(), seen.end());
    while (!work.empty()) {
        const std::size_t k = work.front();
        work.pop_front();
        for (auto g : generators) {
            const Vector image =
                subtract_multiple(r.root(k), pairing(r.root(k), r.coroot(g)), r.root(g));
            const auto idx = r.find_root(image);
            if (!idx) {
                throw NotARootSystem("reflection leaves the root set");
            }
            if (seen.insert(*idx).second) {
                work.push_back(*idx);
            }
        }
    }
    return RootSubset(std::vector<std::size_t>(seen.begin(), seen.end()));
}

RootSubset cross_out_node(const RootDatum& r, std::size_t component, std::size_t node) {
    const auto comps = components(r);
    if (component >= comps.size()) {
        throw std::invalid_argument("component " + std::to_string(component) + " does not exist");
    }
    const Component& comp = comps[component];
    if (node >= comp.simple.size()) {
        throw std::invalid_argument("node " + std::to_string(node) + " out of range for " +
                                    comp.type.name());
    }
    const auto highest = highest_roots(r)[component];
    Vector minus_beta = r.root(highest.root);
    for (auto& x : minus_beta) {
        x = -x;
    }
    std::vector<std::size_t> generators;
    for (auto s : simple_system(r)) {
        if (s != comp.simple[node]) {
            generators.push_back(s);
        }
    }
    generators.push_back(*r.find_root(minus_beta));
    return span_closure(r, reflection_closure(r, generators));
}

std::optional<CrossedNode> cross_out_for_prime(const RootDatum& r, long p) {
    const Integer prime = p;
    for (const auto& h : highest_roots(r)) {
        for (std::size_t j = 0; j < h.coefficients.size(); ++j) {
            if (mpz_divisible_p(h.coefficients[j].get_mpz_t(), prime.get_mpz_t())) {
                return CrossedNode{h.component, j, h.coefficients[j],
                                   cross_out_node(r, h.component, j)};
            }
        }
    }
    return std::nullopt;
}

WeylElement reflection(const RootDatum& r, std::size_t root_index) {
    if (root_index >= r.size()) {
        throw std::out_of_range("root index " + std::to_string(root_index) + " out of range");
    }
    const Vector& a = r.root(root_index);
    const Vector& c = r.coroot(root_index);
    IntMatrix m = IntMatrix::identity(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i) {
        for (std::size_t j = 0; j < r.rank(); ++j) {
            m(i, j) -= Integer(static_cast<long>(a[i])) * static_cast<long>(c[j]);
        }
    }
    return {std::move(m)};
}

std::vector<std::size_t> root_permutation(const RootDatum& r, const WeylElement& w) {
    std::vector<std::size_t> perm(r.size());
    std::vector<bool> hit(r.size(), false);
    for (std::size_t k = 0; k < r.size(); ++k) {
        Vector image(r.rank(), 0);
        for (std::size_t i = 0; i < r.rank(); ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < r.rank(); ++j) {
                acc += w.matrix(i, j) * static_cast<long>(r.root(k)[j]);
            }
            if (!acc.fits_slong_p()) {
                throw std::invalid_argument("Weyl element does not permute the roots");
            }
            image[i] = acc.get_si();
        }
        const auto idx = r.find_root(image);
        if (!idx || hit[*idx]) {
            throw std::invalid_argument("Weyl element does not permute the roots");
        }
        hit[*idx] = true;
        perm[k] = *idx;
    }
    return perm;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    return {a.matrix * b.matrix};
}

namespace {

std::vector<Component> coxeter_components(const RootDatum& r, CoxeterScope scope) {
    std::vector<Component> out;
    for (auto& c : components(r)) {
        if (c.type.series == Series::A) {
            out.push_back(std::move(c));
        } else if (scope == CoxeterScope::whole_datum) {
            throw NonTypeA("component of type " + c.type.name() + " is not of type A");
        }
    }
    return out;
}

}  // namespace

std::vector<std::size_t> coxeter_word_typeA(const RootDatum& r, CoxeterScope scope) {
    std::vector<std::size_t> word;
    for (const auto& c : coxeter_components(r, scope)) {
        word.insert(word.end(), c.simple.begin(), c.simple.end());
    }
    return word;
}

WeylElement coxeter_element_typeA(const RootDatum& r, CoxeterScope scope) {
    WeylElement s{IntMatrix::identity(r.rank())};
    for (auto i : coxeter_word_typeA(r, scope)) {
        s = compose(s, reflection(r, i));
    }
    return s;
}

WeylElement coxeter_closed_form(const RootDatum& r, CoxeterScope scope) {
    IntMatrix m = IntMatrix::identity(r.rank());
    for (const auto& c : coxeter_components(r, scope)) {
        const std::size_t len = c.simple.size();
        for (std::size_t j = 0; j < len; ++j) {
            const Vector& alpha = r.root(c.simple[j]);
            // tail_{j} = sum_{k >= j} alpha_k^vee
            std::vector<Integer> tail(r.rank(), Integer(0));
            for (std::size_t k = j; k < len; ++k) {
                for (std::size_t l = 0; l < r.rank(); ++l) {
                    tail[l] += static_cast<long>(r.coroot(c.simple[k])[l]);
                }
            }
            for (std::size_t a = 0; a < r.rank(); ++a) {
                for (std::size_t l = 0; l < r.rank(); ++l) {
                    m(a, l) -= Integer(static_cast<long>(alpha[a])) * tail[l];
                }
            }
        }
    }
    return {std::move(m)};
}

CoxeterTorsion coxeter_fixed_torsion(const RootDatum& r, CoxeterScope scope) {
    CoxeterTorsion out;
    out.element = coxeter_element_typeA(r, scope);
    // (s - 1)X is spanned by the columns of s - 1
    const IntMatrix image = (out.element.matrix - IntMatrix::identity(r.rank())).transpose();
    out.fixed_character_group = quotient_group(r.rank(), image);

    std::vector<std::size_t> a_roots;
    std::vector<std::size_t> a_simple;
    for (const auto& c : coxeter_components(r, scope)) {
        a_roots.insert(a_roots.end(), c.roots.begin(), c.roots.end());
        a_simple.insert(a_simple.end(), c.simple.begin(), c.simple.end());
    }
    out.image_divisors = relative_divisors(image, rows_of(r, a_roots, false));
    out.coroot_divisors =
        relative_divisors(rows_of(r, a_simple, true), IntMatrix::identity(r.rank()));
    return out;
}

}  // namespace prettygood
