#include "prettygood/rootdatum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

namespace prettygood {

std::int64_t pairing(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) {
        throw DimensionError("pairing of vectors of different length");
    }
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t term = 0;
        if (__builtin_mul_overflow(x[i], y[i], &term) || __builtin_add_overflow(acc, term, &acc)) {
            throw std::overflow_error("pairing overflows 64-bit coordinates");
        }
    }
    return acc;
}

Vector subtract_multiple(const Vector& x, std::int64_t c, const Vector& v) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t t = 0;
        if (__builtin_mul_overflow(c, v[i], &t) || __builtin_sub_overflow(x[i], t, &out[i])) {
            throw std::overflow_error("reflection overflows 64-bit coordinates");
        }
    }
    return out;
}

namespace {

Vector negated(const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == INT64_MIN) {
            throw std::overflow_error("negation overflows 64-bit coordinates");
        }
        out[i] = -v[i];
    }
    return out;
}

}  // namespace

RootDatum::RootDatum(std::size_t rank, std::vector<Vector> roots, std::vector<Vector> coroots)
    : rank_(rank), roots_(std::move(roots)), coroots_(std::move(coroots)) {
    if (roots_.size() != coroots_.size()) {
        throw std::invalid_argument("root datum has " + std::to_string(roots_.size()) +
                                    " roots but " + std::to_string(coroots_.size()) + " coroots");
    }
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (roots_[i].size() != rank_ || coroots_[i].size() != rank_) {
            throw std::invalid_argument("root or coroot " + std::to_string(i) +
                                        " does not have length " + std::to_string(rank_));
        }
        root_index_.emplace(roots_[i], i);
        coroot_index_.emplace(coroots_[i], i);
    }
}

std::optional<std::size_t> RootDatum::find_root(const Vector& v) const {
    auto it = root_index_.find(v);
    if (it == root_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<std::size_t> RootDatum::find_coroot(const Vector& v) const {
    auto it = coroot_index_.find(v);
    if (it == coroot_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

RootSubset::RootSubset(std::vector<std::size_t> idx) : indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool RootSubset::contains(std::size_t i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

RootSubset all_roots(const RootDatum& r) {
    std::vector<std::size_t> idx(r.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return RootSubset(std::move(idx));
}

// ---------------------------------------------------------------------------

std::string CartanComponent::name() const {
    static constexpr char letters[] = "ABCDEFG";
    return letters[static_cast<int>(series)] + std::to_string(rank);
}

CartanComponent parse_cartan_component(std::string_view name) {
    if (name.size() < 2 || std::string_view("ABCDEFG").find(name[0]) == std::string_view::npos) {
        throw PresetError("unknown Cartan type '" + std::string(name) + "'");
    }
    std::size_t rank = 0;
    for (char c : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000) {
            throw PresetError("bad rank in Cartan type '" + std::string(name) + "'");
        }
        rank = rank * 10 + static_cast<std::size_t>(c - '0');
    }
    const auto series = static_cast<Series>(std::string_view("ABCDEFG").find(name[0]));
    bool ok = false;
    switch (series) {
        case Series::A: ok = rank >= 1; break;
        case Series::B:
        case Series::C:
        case Series::D: ok = rank >= 2; break;
        case Series::E: ok = rank >= 6 && rank <= 8; break;
        case Series::F: ok = rank == 4; break;
        case Series::G: ok = rank == 2; break;
    }
    if (!ok) {
        throw PresetError("unsupported rank for Cartan type '" + std::string(name) + "'");
    }
    return {series, rank};
}

namespace {

// Bourbaki Dynkin diagrams: edges (1-based nodes) and squared root lengths.
struct Diagram {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<int> lengths;
};

Diagram diagram(const CartanComponent& t) {
    const std::size_t n = t.rank;
    Diagram d;
    d.lengths.assign(n, 1);
    switch (t.series) {
        case Series::A:
        case Series::B:
        case Series::C:
        case Series::F:
        case Series::G:
            for (std::size_t i = 1; i < n; ++i) {
                d.edges.emplace_back(i, i + 1);
            }
            break;
        case Series::D:
            for (std::size_t i = 1; i + 2 < n; ++i) {
                d.edges.emplace_back(i, i + 1);
            }
            if (n >= 3) {
                d.edges.emplace_back(n - 2, n - 1);
                d.edges.emplace_back(n - 2, n);
            }
            break;
        case Series::E:
            d.edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            for (std::size_t i = 6; i < n; ++i) {
                d.edges.emplace_back(i, i + 1);
            }
            break;
    }
    switch (t.series) {
        case Series::B:
            std::fill(d.lengths.begin(), d.lengths.end() - 1, 2);
            break;
        case Series::C:
            d.lengths.back() = 2;
            break;
        case Series::F:
            d.lengths = {2, 2, 1, 1};
            break;
        case Series::G:
            d.lengths = {1, 3};
            break;
        default:
            break;
    }
    return d;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(const CartanComponent& type) {
    const Diagram d = diagram(type);
    const std::size_t n = type.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        c[i][i] = 2;
    }
    for (auto [a, b] : d.edges) {
        const std::size_t i = a - 1;
        const std::size_t j = b - 1;
        const int li = d.lengths[i];
        const int lj = d.lengths[j];
        c[i][j] = lj > li ? -(lj / li) : -1;
        c[j][i] = li > lj ? -(li / lj) : -1;
    }
    return c;
}

// ---------------------------------------------------------------------------

namespace {

// All (root, coroot) pairs generated from simple ones by simple reflections.
// Positive roots (lexicographically) come first, and root i + N is -root i.
RootDatum close_under_reflections(std::size_t rank, const std::vector<Vector>& simple_roots,
                                  const std::vector<Vector>& simple_coroots) {
    std::vector<Vector> roots;
    std::vector<Vector> coroots;
    std::set<Vector> seen;
    std::deque<std::size_t> work;
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
        if (seen.insert(simple_roots[i]).second) {
            roots.push_back(simple_roots[i]);
            coroots.push_back(simple_coroots[i]);
            work.push_back(roots.size() - 1);
        }
    }
    while (!work.empty()) {
        const std::size_t k = work.front();
        work.pop_front();
        for (std::size_t i = 0; i < simple_roots.size(); ++i) {
            Vector x = subtract_multiple(roots[k], pairing(roots[k], simple_coroots[i]),
                                         simple_roots[i]);
            if (!seen.insert(x).second) {
                continue;
            }
            Vector y = subtract_multiple(coroots[k], pairing(simple_roots[i], coroots[k]),
                                         simple_coroots[i]);
            roots.push_back(std::move(x));
            coroots.push_back(std::move(y));
            work.push_back(roots.size() - 1);
        }
    }
    std::vector<Vector> pos_roots;
    std::vector<Vector> pos_coroots;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (is_positive(roots[i])) {
            pos_roots.push_back(roots[i]);
            pos_coroots.push_back(coroots[i]);
        }
    }
    const std::size_t npos = pos_roots.size();
    for (std::size_t i = 0; i < npos; ++i) {
        pos_roots.push_back(negated(pos_roots[i]));
        pos_coroots.push_back(negated(pos_coroots[i]));
    }
    return RootDatum(rank, std::move(pos_roots), std::move(pos_coroots));
}

Vector unit(std::size_t n, std::size_t i) {
    Vector v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

RootDatum simply_connected(const CartanComponent& type) {
    const auto c = cartan_matrix(type);
    const std::size_t n = type.rank;
    std::vector<Vector> simple_roots(n, Vector(n, 0));
    std::vector<Vector> simple_coroots;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            simple_roots[j][i] = c[i][j];
        }
        simple_coroots.push_back(unit(n, j));
    }
    return close_under_reflections(n, simple_roots, simple_coroots);
}

RootDatum adjoint(const CartanComponent& type) {
    const auto c = cartan_matrix(type);
    const std::size_t n = type.rank;
    std::vector<Vector> simple_roots;
    std::vector<Vector> simple_coroots;
    for (std::size_t j = 0; j < n; ++j) {
        simple_roots.push_back(unit(n, j));
        simple_coroots.emplace_back(c[j].begin(), c[j].end());
    }
    return close_under_reflections(n, simple_roots, simple_coroots);
}

RootDatum general_linear(std::size_t n) {
    std::vector<Vector> roots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v(n, 0);
            v[i] = 1;
            v[j] = -1;
            roots.push_back(std::move(v));
        }
    }
    const std::size_t npos = roots.size();
    for (std::size_t i = 0; i < npos; ++i) {
        roots.push_back(negated(roots[i]));
    }
    auto coroots = roots;
    return RootDatum(n, std::move(roots), std::move(coroots));
}

RootDatum torus(std::size_t r) {
    return RootDatum(r, {}, {});
}

RootDatum dual(const RootDatum& r) {
    return RootDatum(r.rank(), r.coroots(), r.roots());
}

RootDatum direct_sum(const RootDatum& a, const RootDatum& b) {
    const std::size_t n = a.rank() + b.rank();
    std::vector<Vector> roots;
    std::vector<Vector> coroots;
    auto embed = [n](const Vector& v, std::size_t offset) {
        Vector out(n, 0);
        std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
        return out;
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
        roots.push_back(embed(a.root(i), 0));
        coroots.push_back(embed(a.coroot(i), 0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        roots.push_back(embed(b.root(i), a.rank()));
        coroots.push_back(embed(b.coroot(i), a.rank()));
    }
    return RootDatum(n, std::move(roots), std::move(coroots));
}

// --- preset grammar --------------------------------------------------------

namespace {

class PresetParser {
public:
    explicit PresetParser(std::string_view text) : text_(text) {}

    RootDatum parse() {
        RootDatum r = term();
        skip_space();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw PresetError("cannot parse preset '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a name");
        }
        return text_.substr(start, pos_ - start);
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::size_t count(std::string_view w) const {
        if (w.empty() || w.size() > 4 ||
            !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw PresetError("expected a small nonnegative integer, got '" + std::string(w) + "'");
        }
        return static_cast<std::size_t>(std::stoul(std::string(w)));
    }

    RootDatum term() {
        const std::string_view head = word();
        expect('(');
        RootDatum result;
        if (head == "SC") {
            result = simply_connected(parse_cartan_component(word()));
        } else if (head == "AD") {
            result = adjoint(parse_cartan_component(word()));
        } else if (head == "GL") {
            const std::size_t n = count(word());
            if (n == 0) {
                throw PresetError("GL(0) is not supported");
            }
            result = general_linear(n);
        } else if (head == "Torus") {
            result = torus(count(word()));
        } else if (head == "Sum") {
            result = torus(0);
            if (!accept(')')) {
                do {
                    result = direct_sum(result, term());
                } while (accept(','));
                expect(')');
            }
            return result;
        } else {
            fail("unknown preset family '" + std::string(head) + "'");
        }
        expect(')');
        return result;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RootDatum preset(std::string_view name) {
    return PresetParser(name).parse();
}

std::vector<std::string> standard_presets(std::size_t max_rank) {
    std::vector<std::string> types;
    auto add_series = [&](char s, std::size_t lo, std::size_t hi) {
        for (std::size_t n = lo; n <= std::min(hi, max_rank); ++n) {
            types.push_back(s + std::to_string(n));
        }
    };
    add_series('A', 1, max_rank);
    add_series('B', 2, max_rank);
    add_series('C', 2, max_rank);
    add_series('D', 4, max_rank);
    add_series('E', 6, 8);
    add_series('F', 4, 4);
    add_series('G', 2, 2);

    std::vector<std::string> out;
    for (const auto& t : types) {
        out.push_back("SC(" + t + ")");
        out.push_back("AD(" + t + ")");
    }
    for (std::size_t n = 1; n <= max_rank; ++n) {
        out.push_back("GL(" + std::to_string(n) + ")");
    }
    for (std::size_t n = 0; n <= std::min<std::size_t>(max_rank, 4); ++n) {
        out.push_back("Torus(" + std::to_string(n) + ")");
    }
    const std::pair<const char*, std::size_t> sums[] = {
        {"Sum(SC(A1),SC(A1))", 2},   {"Sum(SC(A1),AD(A1))", 2},     {"Sum(AD(A1),AD(A1))", 2},
        {"Sum(SC(A1),Torus(1))", 2}, {"Sum(GL(2),SC(A1))", 3},      {"Sum(SC(A2),SC(C2))", 4},
        {"Sum(AD(A2),GL(2))", 4},    {"Sum(SC(A1),SC(A1),SC(A1))", 3}, {"Sum(SC(G2),AD(A1))", 3},
        {"Sum(SC(A3),Torus(2))", 5}, {"Sum(GL(3),SC(B3))", 6},      {"Sum(SC(A4),AD(A3))", 7},
    };
    for (const auto& [name, rk] : sums) {
        if (rk <= max_rank) {
            out.emplace_back(name);
        }
    }
    return out;
}

// --- validation ------------------------------------------------------------

std::vector<std::string> validate(const RootDatum& r) {
    std::vector<std::string> v;
    const std::size_t n = r.size();
    try {
        for (std::size_t i = 0; i < n; ++i) {
            if (pairing(r.root(i), r.coroot(i)) != 2) {
                v.push_back("pairing != 2 at index " + std::to_string(i));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (r.find_root(r.root(i)) != i) {
                v.push_back("duplicate root at index " + std::to_string(i));
            }
            if (r.find_coroot(r.coroot(i)) != i) {
                v.push_back("duplicate coroot at index " + std::to_string(i));
            }
            if (!r.find_root(negated(r.root(i)))) {
                v.push_back("root set not closed under negation at index " + std::to_string(i));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            Vector twice = r.root(i);
            for (auto& x : twice) {
                if (__builtin_mul_overflow(x, 2, &x)) {
                    throw std::overflow_error("coordinate overflow");
                }
            }
            if (auto j = r.find_root(twice)) {
                v.push_back("not reduced: root " + std::to_string(*j) + " is twice root " +
                            std::to_string(i));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Vector image =
                    subtract_multiple(r.root(j), pairing(r.root(j), r.coroot(i)), r.root(i));
                if (!r.find_root(image)) {
                    v.push_back("reflection at index " + std::to_string(i) +
                                " does not stabilize the roots (image of root " +
                                std::to_string(j) + ")");
                    break;
                }
            }
            for (std::size_t j = 0; j < n; ++j) {
                const Vector image =
                    subtract_multiple(r.coroot(j), pairing(r.root(i), r.coroot(j)), r.coroot(i));
                if (!r.find_coroot(image)) {
                    v.push_back("coreflection at index " + std::to_string(i) +
                                " does not stabilize the coroots (image of coroot " +
                                std::to_string(j) + ")");
                    break;
                }
            }
        }
    } catch (const std::overflow_error& e) {
        v.push_back(std::string("coordinate overflow: ") + e.what());
    }
    return v;
}

// --- structure -------------------------------------------------------------

bool is_positive(const Vector& v) {
    for (auto x : v) {
        if (x != 0) {
            return x > 0;
        }
    }
    return false;
}

std::vector<std::size_t> simple_system(const RootDatum& r) {
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (is_positive(r.root(i))) {
            positive.push_back(i);
        }
    }
    std::vector<bool> decomposable(r.size(), false);
    for (std::size_t a = 0; a < positive.size(); ++a) {
        for (std::size_t b = a + 1; b < positive.size(); ++b) {
            Vector sum = subtract_multiple(r.root(positive[a]), -1, r.root(positive[b]));
            if (auto k = r.find_root(sum)) {
                decomposable[*k] = true;
            }
        }
    }
    std::vector<std::size_t> simple;
    for (auto i : positive) {
        if (!decomposable[i]) {
            simple.push_back(i);
        }
    }
    if (simple.size() != root_lattice_rank(r)) {
        throw NotARootSystem("simple system has " + std::to_string(simple.size()) +
                             " elements but Z Phi has rank " +
                             std::to_string(root_lattice_rank(r)));
    }
    return simple;
}

namespace {

struct Recognized {
    CartanComponent type;
    std::vector<std::size_t> order;  // local positions in Bourbaki order
};

// a[i][j] = <alpha_j, alpha_i^vee> for the simple roots of one component;
// `ids` are the global root indices used for deterministic tie breaks.
Recognized recognize(const std::vector<std::vector<std::int64_t>>& a,
                     const std::vector<std::size_t>& ids) {
    const std::size_t k = a.size();
    auto fail = [&](const std::string& why) -> NotARootSystem {
        return NotARootSystem("component with " + std::to_string(k) +
                              " simple roots matches no Cartan type: " + why);
    };
    std::vector<std::vector<std::size_t>> adj(k);
    std::size_t edges = 0;
    std::size_t doubles = 0;
    std::size_t triples = 0;
    std::pair<std::size_t, std::size_t> multi_edge{0, 0};
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i][i] != 2) {
            throw fail("diagonal entry is not 2");
        }
        for (std::size_t j = i + 1; j < k; ++j) {
            if (a[i][j] == 0 && a[j][i] == 0) {
                continue;
            }
            if (a[i][j] >= 0 || a[j][i] >= 0) {
                throw fail("inconsistent off-diagonal signs");
            }
            const std::int64_t w = a[i][j] * a[j][i];
            if (w > 3 || (w > 1 && a[i][j] != -1 && a[j][i] != -1)) {
                throw fail("bond of weight " + std::to_string(w));
            }
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
            if (w == 2) {
                ++doubles;
                multi_edge = {i, j};
            } else if (w == 3) {
                ++triples;
                multi_edge = {i, j};
            }
        }
    }
    if (edges + 1 != k) {
        throw fail("Dynkin graph is not a tree");
    }
    // longer(i, j): alpha_j is longer than alpha_i
    auto longer = [&](std::size_t i, std::size_t j) { return a[i][j] < -1; };
    auto walk = [&](std::size_t start, std::size_t from) {
        std::vector<std::size_t> path{start};
        std::size_t prev = from;
        std::size_t cur = start;
        for (;;) {
            std::size_t next = k;
            for (auto nb : adj[cur]) {
                if (nb != prev) {
                    next = nb;
                }
            }
            if (next == k || adj[cur].size() > 2) {
                break;
            }
            path.push_back(next);
            prev = cur;
            cur = next;
        }
        return path;
    };
    std::vector<std::size_t> endpoints;
    std::size_t max_degree = 0;
    for (std::size_t i = 0; i < k; ++i) {
        max_degree = std::max(max_degree, adj[i].size());
        if (adj[i].size() <= 1) {
            endpoints.push_back(i);
        }
    }
    // Verify connectivity through the tree walk below; edges + 1 == k plus a
    // full walk covering all nodes implies a path.
    Recognized out;
    if (k == 1) {
        out = {{Series::A, 1}, {0}};
    } else if (triples > 0 || doubles > 0) {
        if (triples + doubles != 1 || max_degree > 2) {
            throw fail("multiple bonds or branching with a multiple bond");
        }
        auto [u, v] = multi_edge;
        if (k == 2) {
            // short root first: C2 or G2
            const Series s = triples ? Series::G : Series::C;
            out = {{s, 2}, longer(u, v) ? std::vector<std::size_t>{u, v}
                                         : std::vector<std::size_t>{v, u}};
        } else if (triples) {
            throw fail("triple bond in rank > 2");
        } else if (adj[u].size() == 1 || adj[v].size() == 1) {
            const std::size_t end = adj[u].size() == 1 ? u : v;
            const std::size_t other = end == u ? v : u;
            const std::size_t start = endpoints[0] == end ? endpoints[1] : endpoints[0];
            out.order = walk(start, k);
            out.type = {longer(end, other) ? Series::B : Series::C, k};
        } else if (k == 4) {
            // F4: alpha_1, alpha_2 long
            std::size_t start = endpoints[0];
            auto path = walk(start, k);
            if (!longer(path[2], path[1])) {
                path = walk(endpoints[1], k);
            }
            out = {{Series::F, 4}, path};
        } else {
            throw fail("double bond in the interior of a long path");
        }
    } else if (max_degree <= 2) {
        const std::size_t start = ids[endpoints[0]] < ids[endpoints[1]] ? endpoints[0] : endpoints[1];
        out = {{Series::A, k}, walk(start, k)};
    } else {
        std::size_t branch = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (adj[i].size() == 3) {
                if (branch != k) {
                    throw fail("two branch nodes");
                }
                branch = i;
            } else if (adj[i].size() > 3) {
                throw fail("node of degree > 3");
            }
        }
        std::vector<std::vector<std::size_t>> arms;
        for (auto nb : adj[branch]) {
            arms.push_back(walk(nb, branch));
        }
        std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
            return std::pair(x.size(), ids[x[0]]) < std::pair(y.size(), ids[y[0]]);
        });
        const std::size_t l0 = arms[0].size();
        const std::size_t l1 = arms[1].size();
        const std::size_t l2 = arms[2].size();
        if (l0 == 1 && l1 == 1) {
            out.type = {Series::D, k};
            out.order.assign(arms[2].rbegin(), arms[2].rend());
            out.order.push_back(branch);
            out.order.push_back(arms[0][0]);
            out.order.push_back(arms[1][0]);
        } else if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
            out.type = {Series::E, k};
            out.order = {arms[1][1], arms[0][0], arms[1][0], branch};
            out.order.insert(out.order.end(), arms[2].begin(), arms[2].end());
        } else {
            throw fail("branched diagram of infinite type");
        }
    }
    if (out.order.size() != k) {
        throw fail("Dynkin graph is not connected");
    }
    const auto catalog = cartan_matrix(out.type);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (a[out.order[i]][out.order[j]] != catalog[i][j]) {
                throw fail("Cartan matrix differs from catalog " + out.type.name());
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Component> components(const RootDatum& r) {
    const std::size_t n = r.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (pairing(r.root(i), r.coroot(j)) != 0) {
                const std::size_t a = find(i);
                const std::size_t b = find(j);
                if (a != b) {
                    parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
    }
    std::map<std::size_t, Component> by_root;
    for (std::size_t i = 0; i < n; ++i) {
        by_root[find(i)].roots.push_back(i);
    }
    const auto simple = simple_system(r);
    std::vector<Component> out;
    for (auto& [rep, comp] : by_root) {
        std::vector<std::size_t> local;
        for (auto s : simple) {
            if (find(s) == rep) {
                local.push_back(s);
            }
        }
        std::vector<std::vector<std::int64_t>> a(local.size(),
                                                 std::vector<std::int64_t>(local.size()));
        for (std::size_t i = 0; i < local.size(); ++i) {
            for (std::size_t j = 0; j < local.size(); ++j) {
                a[i][j] = pairing(r.root(local[j]), r.coroot(local[i]));
            }
        }
        if (local.empty()) {
            throw NotARootSystem("component without simple roots");
        }
        const Recognized rec = recognize(a, local);
        comp.type = rec.type;
        for (auto pos : rec.order) {
            comp.simple.push_back(local[pos]);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::string cartan_type_name(const std::vector<Component>& comps) {
    if (comps.empty()) {
        return "T";
    }
    std::string s;
    for (const auto& c : comps) {
        s += (s.empty() ? "" : "x") + c.type.name();
    }
    return s;
}

IntMatrix root_matrix(const RootDatum& r) {
    return IntMatrix::from_rows(r.roots(), r.rank());
}

IntMatrix coroot_matrix(const RootDatum& r) {
    return IntMatrix::from_rows(r.coroots(), r.rank());
}

IntMatrix root_rows(const RootDatum& r, const RootSubset& s) {
    IntMatrix m(s.size(), r.rank());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Vector& v = r.root(s.indices[k]);
        for (std::size_t j = 0; j < r.rank(); ++j) {
            m(k, j) = static_cast<long>(v[j]);
        }
    }
    return m;
}

IntMatrix coroot_rows(const RootDatum& r, const RootSubset& s) {
    return root_rows(dual(r), s);
}

std::size_t root_lattice_rank(const RootDatum& r) {
    return rank(root_matrix(r));
}

bool is_semisimple(const RootDatum& r) {
    return root_lattice_rank(r) == r.rank();
}

FinAbGroup weight_lattice_quotient(const RootDatum& r, const RootSubset& subset) {
    const auto simple = simple_system(r);
    IntMatrix gens(subset.size(), simple.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        for (std::size_t j = 0; j < simple.size(); ++j) {
            gens(k, j) = static_cast<long>(pairing(r.root(subset.indices[k]), r.coroot(simple[j])));
        }
    }
    return quotient_group(simple.size(), gens);
}

FinAbGroup character_quotient(const RootDatum& r, const RootSubset& subset) {
    return quotient_group(r.rank(), root_rows(r, subset));
}

FinAbGroup cocharacter_quotient(const RootDatum& r, const RootSubset& subset) {
    return quotient_group(r.rank(), coroot_rows(r, subset));
}

}  // namespace prettygood
