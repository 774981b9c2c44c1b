#pragma once

// Root data (X, Phi, Y, Phi^vee) in coordinates: X and Y are identified with
// Z^rank through a pair of dual bases, so the pairing is the dot product.
// Root i and coroot i correspond under the bijection Phi -> Phi^vee.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prettygood/intlin.hpp"

namespace prettygood {

using Vector = std::vector<std::int64_t>;

struct NotARootSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PresetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Overflow-checked <x, y>. Root coordinates are int64; anything that would
/// overflow throws std::overflow_error instead of wrapping.
std::int64_t pairing(const Vector& x, const Vector& y);

/// x - c * v, overflow-checked.
Vector subtract_multiple(const Vector& x, std::int64_t c, const Vector& v);

class RootDatum {
public:
    RootDatum() = default;
    /// Throws std::invalid_argument on shape errors (vector lengths, counts).
    RootDatum(std::size_t rank, std::vector<Vector> roots, std::vector<Vector> coroots);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return roots_.size(); }
    const std::vector<Vector>& roots() const noexcept { return roots_; }
    const std::vector<Vector>& coroots() const noexcept { return coroots_; }
    const Vector& root(std::size_t i) const { return roots_.at(i); }
    const Vector& coroot(std::size_t i) const { return coroots_.at(i); }

    std::optional<std::size_t> find_root(const Vector& v) const;
    std::optional<std::size_t> find_coroot(const Vector& v) const;

    friend bool operator==(const RootDatum& a, const RootDatum& b) {
        return a.rank_ == b.rank_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_;
    }

private:
    std::size_t rank_ = 0;
    std::vector<Vector> roots_;
    std::vector<Vector> coroots_;
    std::map<Vector, std::size_t> root_index_;
    std::map<Vector, std::size_t> coroot_index_;
};

/// A set of root indices of some datum, kept sorted and duplicate-free.
struct RootSubset {
    std::vector<std::size_t> indices;

    RootSubset() = default;
    explicit RootSubset(std::vector<std::size_t> idx);

    bool contains(std::size_t i) const;
    std::size_t size() const noexcept { return indices.size(); }
    friend bool operator==(const RootSubset&, const RootSubset&) = default;
    friend auto operator<=>(const RootSubset&, const RootSubset&) = default;
};

RootSubset all_roots(const RootDatum& r);

// --- Cartan types ----------------------------------------------------------

enum class Series { A, B, C, D, E, F, G };

struct CartanComponent {
    Series series = Series::A;
    std::size_t rank = 1;

    std::string name() const;
    friend bool operator==(const CartanComponent&, const CartanComponent&) = default;
    friend auto operator<=>(const CartanComponent&, const CartanComponent&) = default;
};

/// Parses "A3", "E8", ... and checks the rank is supported.
CartanComponent parse_cartan_component(std::string_view name);

/// Catalog Cartan matrix in Bourbaki numbering, C[i][j] = <alpha_j, alpha_i^vee>.
/// D2 and D3 are given by their Dynkin diagrams (A1xA1, A3).
std::vector<std::vector<int>> cartan_matrix(const CartanComponent& type);

// --- construction ----------------------------------------------------------

RootDatum simply_connected(const CartanComponent& type);
RootDatum adjoint(const CartanComponent& type);
RootDatum general_linear(std::size_t n);
RootDatum torus(std::size_t r);

/// SC(<type>) | AD(<type>) | GL(n) | Torus(r) | Sum(p1, p2, ...)
RootDatum preset(std::string_view name);

/// Preset names for SC and AD of every irreducible type, GL(n), Torus(r)
/// and a few sums, all of rank at most max_rank, in a fixed order.
std::vector<std::string> standard_presets(std::size_t max_rank = 8);

RootDatum dual(const RootDatum& r);
RootDatum direct_sum(const RootDatum& a, const RootDatum& b);

/// Axiom check; empty result means the datum is a valid reduced root datum.
std::vector<std::string> validate(const RootDatum& r);

// --- structure -------------------------------------------------------------

/// Lexicographic positivity: the sign of the first nonzero coordinate.
/// This agrees with the weighted functional (N^{r-1}, ..., N, 1) for
/// N = 1 + max |coordinate| over the roots.
bool is_positive(const Vector& v);

/// Indices of the simple roots for the lexicographic positive system.
std::vector<std::size_t> simple_system(const RootDatum& r);

struct Component {
    CartanComponent type;
    std::vector<std::size_t> roots;   // all root indices of the component
    std::vector<std::size_t> simple;  // simple roots, Bourbaki node order
};

/// Irreducible components ordered by smallest root index, each recognized
/// against the Cartan catalog. Throws NotARootSystem on recognition failure.
std::vector<Component> components(const RootDatum& r);

std::string cartan_type_name(const std::vector<Component>& comps);

IntMatrix root_matrix(const RootDatum& r);
IntMatrix coroot_matrix(const RootDatum& r);
IntMatrix root_rows(const RootDatum& r, const RootSubset& s);
IntMatrix coroot_rows(const RootDatum& r, const RootSubset& s);

std::size_t root_lattice_rank(const RootDatum& r);
bool is_semisimple(const RootDatum& r);

/// Lambda / Z Phi' where Lambda is the weight lattice of Phi, computed via the
/// isomorphism Lambda -> Z^|Delta|, lambda -> (<lambda, alpha^vee>) over the
/// simple coroots.
FinAbGroup weight_lattice_quotient(const RootDatum& r, const RootSubset& subset);

/// X / Z Phi' and Y / Z Phi'^vee.
FinAbGroup character_quotient(const RootDatum& r, const RootSubset& subset);
FinAbGroup cocharacter_quotient(const RootDatum& r, const RootSubset& subset);

}  // namespace prettygood
