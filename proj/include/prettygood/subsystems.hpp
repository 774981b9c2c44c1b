#pragma once

// Subsets of Phi: span closure, highest roots, Borel-de Siebenthal node
// crossing, reflections and type-A Coxeter elements.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prettygood/intlin.hpp"
#include "prettygood/rootdatum.hpp"

namespace prettygood {

struct NonTypeA : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Element of the Weyl group acting on X (column vectors, x -> matrix * x).
struct WeylElement {
    IntMatrix matrix;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// {alpha in Phi : alpha in Z S}.
RootSubset span_closure(const RootDatum& r, const RootSubset& s);

struct HighestRoot {
    std::size_t component = 0;
    std::size_t root = 0;                  // index of the highest root
    std::vector<Integer> coefficients;     // over Component::simple (Bourbaki order)
};

std::vector<HighestRoot> highest_roots(const RootDatum& r);

/// Coordinates of each root of `comp` over its simple roots, indexed like
/// comp.roots.
std::vector<std::vector<Integer>> simple_coordinates(const RootDatum& r, const Component& comp);

/// Subsystem generated by reflections in (Delta \ {alpha_node}) u {-beta},
/// beta the highest root of component `component`, returned span-closed.
/// `node` is a 0-based position in Bourbaki order.
RootSubset cross_out_node(const RootDatum& r, std::size_t component, std::size_t node);

struct CrossedNode {
    std::size_t component = 0;
    std::size_t node = 0;
    Integer coefficient;
    RootSubset subset;
};

/// First component and node (Bourbaki order) whose highest-root coefficient
/// is divisible by p, crossed out. nullopt when p is good.
std::optional<CrossedNode> cross_out_for_prime(const RootDatum& r, long p);

/// The subsystem generated by the reflections in `generators` applied to
/// the generators themselves (visited-set worklist).
RootSubset reflection_closure(const RootDatum& r, const std::vector<std::size_t>& generators);

WeylElement reflection(const RootDatum& r, std::size_t root_index);

/// Image index of every root under w; throws std::invalid_argument if w
/// does not permute Phi.
std::vector<std::size_t> root_permutation(const RootDatum& r, const WeylElement& w);

WeylElement compose(const WeylElement& a, const WeylElement& b);

/// Which components enter the Coxeter product. `whole_datum` requires every
/// component to be of type A (NonTypeA otherwise); `type_a_components` skips
/// the others and measures against the type-A part of Z Phi and Z Phi^vee.
enum class CoxeterScope { whole_datum, type_a_components };

/// Simple reflections, component by component in Bourbaki order, whose
/// product is the type-A Coxeter element.
std::vector<std::size_t> coxeter_word_typeA(const RootDatum& r,
                                            CoxeterScope scope = CoxeterScope::whole_datum);

/// s = s_1 ... s_n, s_i = s_{i1} ... s_{i m_i}, as a product of reflections.
WeylElement coxeter_element_typeA(const RootDatum& r,
                                  CoxeterScope scope = CoxeterScope::whole_datum);

/// Same element from the closed form
/// s(l) = l - sum_i sum_j sum_{k >= j} <l, alpha_ik^vee> alpha_ij.
WeylElement coxeter_closed_form(const RootDatum& r,
                                CoxeterScope scope = CoxeterScope::whole_datum);

struct CoxeterTorsion {
    WeylElement element;
    FinAbGroup fixed_character_group;           // X / (s-1)X
    std::vector<Integer> image_divisors;        // (s-1)X inside Z Phi
    std::vector<Integer> coroot_divisors;       // Z Phi^vee inside Y
};

CoxeterTorsion coxeter_fixed_torsion(const RootDatum& r,
                                     CoxeterScope scope = CoxeterScope::whole_datum);

}  // namespace prettygood
