#include "prettygood/isogeny.hpp"

#include "prettygood/primes.hpp"

namespace prettygood {

namespace {

// F * v, or F^T * v when `transposed`; nullopt if an entry leaves int64.
std::optional<Vector> apply(const IntMatrix& f, const Vector& v, bool transposed) {
    const std::size_t out_dim = transposed ? f.cols() : f.rows();
    const std::size_t in_dim = transposed ? f.rows() : f.cols();
    Vector out(out_dim, 0);
    for (std::size_t i = 0; i < out_dim; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < in_dim; ++j) {
            acc += (transposed ? f(j, i) : f(i, j)) * static_cast<long>(v[j]);
        }
        if (!acc.fits_slong_p()) {
            return std::nullopt;
        }
        out[i] = acc.get_si();
    }
    return out;
}

void check_bijection(const std::vector<Vector>& from, const std::vector<Vector>& to,
                     const IntMatrix& f, bool transposed, const std::string& what,
                     std::vector<std::string>& out) {
    std::vector<bool> hit(to.size(), false);
    std::map<Vector, std::size_t> index;
    for (std::size_t i = 0; i < to.size(); ++i) {
        index.emplace(to[i], i);
    }
    bool ok = from.size() == to.size();
    for (std::size_t i = 0; i < from.size(); ++i) {
        const auto image = apply(f, from[i], transposed);
        auto it = image ? index.find(*image) : index.end();
        if (it == index.end()) {
            out.push_back(what + " image of index " + std::to_string(i) + " is not in the " +
                          (transposed ? "source coroots" : "target roots"));
            ok = false;
            continue;
        }
        if (hit[it->second]) {
            out.push_back(what + " map is not injective at index " + std::to_string(i));
            ok = false;
        }
        hit[it->second] = true;
    }
    if (!ok && from.size() != to.size()) {
        out.push_back(what + " map is not onto: " + std::to_string(from.size()) + " vs " +
                      std::to_string(to.size()) + " elements");
    }
}

void require_valid(const Isogeny& f) {
    const auto v = validate_isogeny(f);
    if (!v.empty()) {
        throw InvalidIsogeny("invalid isogeny: " + v.front());
    }
}

}  // namespace

std::vector<std::string> validate_isogeny(const Isogeny& f) {
    std::vector<std::string> out;
    for (const auto& s : validate(f.source)) {
        out.push_back("source: " + s);
    }
    for (const auto& s : validate(f.target)) {
        out.push_back("target: " + s);
    }
    if (f.matrix.rows() != f.target.rank() || f.matrix.cols() != f.source.rank()) {
        out.push_back("matrix must be " + std::to_string(f.target.rank()) + "x" +
                      std::to_string(f.source.rank()));
        return out;
    }
    if (f.source.rank() != f.target.rank() || determinant(f.matrix) == 0) {
        out.push_back("map is not injective with finite cokernel");
    }
    // f maps Phi onto Phi~ and f^vee = F^T maps Phi~^vee onto Phi^vee
    check_bijection(f.source.roots(), f.target.roots(), f.matrix, false, "root", out);
    check_bijection(f.target.coroots(), f.source.coroots(), f.matrix, true, "coroot", out);
    return out;
}

FinAbGroup cokernel(const Isogeny& f) {
    require_valid(f);
    return quotient_group(f.target.rank(), f.matrix.transpose());
}

FinAbGroup dual_cokernel(const Isogeny& f) {
    require_valid(f);
    return quotient_group(f.source.rank(), f.matrix);
}

bool separable_at(const Isogeny& f, long p) {
    const FinAbGroup c = cokernel(f);
    const FinAbGroup cd = dual_cokernel(f);
    if (c.order() != cd.order()) {
        throw std::logic_error("cokernels of f and f^vee have different orders");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    return !mpz_divisible_ui_p(c.order().get_mpz_t(), static_cast<unsigned long>(p));
}

Transfer transfer_pretty_good(const Isogeny& f, long p) {
    Transfer t;
    t.applies = p_torsion_free(cokernel(f), p);
    t.source_pretty_good = pretty_good(f.source, p);
    t.target_pretty_good = pretty_good(f.target, p);
    if (t.applies && t.source_pretty_good != t.target_pretty_good) {
        throw std::logic_error("pretty-good status changed across an isogeny whose cokernel has "
                               "no " + std::to_string(p) + "-torsion");
    }
    return t;
}

Isogeny compose(const Isogeny& f, const Isogeny& g) {
    if (!(f.target == g.source)) {
        throw std::invalid_argument("compose: target of f is not the source of g");
    }
    return {f.source, g.target, g.matrix * f.matrix};
}

Isogeny natural_isogeny(const CartanComponent& type) {
    const auto c = cartan_matrix(type);
    IntMatrix m(type.rank, type.rank);
    for (std::size_t i = 0; i < type.rank; ++i) {
        for (std::size_t j = 0; j < type.rank; ++j) {
            m(i, j) = c[i][j];
        }
    }
    return {adjoint(type), simply_connected(type), std::move(m)};
}

}  // namespace prettygood
