#include "onb/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "onb/polynomial.hpp"

namespace onb {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check(bool ok, const char* msg) {
    if (!ok) throw internal_error(msg);
}

const FieldPtr& base_of(const FieldPtr& f) {
    return f->is_prime_field() ? f : f->base();
}

bool same_set(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

} // namespace

std::vector<FieldElement> base_coords(const FieldElement& a) {
    require(a.valid(), "coordinates of a detached element");
    if (a.field()->is_prime_field()) return {a};
    return a.coords();
}

Matrix coordinate_matrix(const FieldPtr& field, const std::vector<FieldElement>& elems) {
    require(field != nullptr, "null field handle");
    const unsigned n = field->degree();
    require(!elems.empty(), "no elements given");
    Matrix m(base_of(field), n, elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j) {
        require(elems[j].valid() && *elems[j].field() == *field,
                "element belongs to a different field");
        const auto coords = base_coords(elems[j]);
        for (unsigned i = 0; i < n; ++i) m.at(i, j) = coords[i];
    }
    return m;
}

bool is_basis(const FieldPtr& field, const std::vector<FieldElement>& elems) {
    require(field != nullptr, "null field handle");
    require(elems.size() == field->degree(), "element count must equal the extension degree");
    return mat_rank(coordinate_matrix(field, elems)) == field->degree();
}

OrderedBasis::OrderedBasis(FieldPtr field, std::vector<FieldElement> elements, BasisKind kind)
    : field_(std::move(field)), elements_(std::move(elements)), kind_(kind) {
    require(is_basis(field_, elements_), "elements are not linearly independent");
    if (kind_ == BasisKind::normal) {
        for (std::size_t i = 1; i < elements_.size(); ++i)
            check(elements_[i] == frobenius(elements_[0], static_cast<unsigned>(i)),
                  "normal basis is not the Frobenius orbit of its generator");
    } else if (kind_ == BasisKind::polynomial) {
        check(elements_[0].is_one(), "polynomial basis must start at 1");
        if (elements_.size() > 1) {
            const FieldElement& g = elements_[1];
            for (std::size_t i = 2; i < elements_.size(); ++i)
                check(elements_[i] == g.pow(i), "polynomial basis entries must be powers");
        }
    }
}

OrderedBasis normal_closure(const FieldElement& a) {
    require(a.valid(), "normal closure of a detached element");
    const FieldPtr& f = a.field();
    const unsigned n = f->degree();
    std::vector<FieldElement> orbit;
    orbit.reserve(n);
    orbit.push_back(a);
    for (unsigned i = 1; i < n; ++i) orbit.push_back(frobenius(orbit.back(), 1));
    if (!is_basis(f, orbit)) throw std::invalid_argument("not a normal element");
    return OrderedBasis(f, std::move(orbit), BasisKind::normal);
}

OrderedBasis polynomial_basis(const FieldElement& g) {
    require(g.valid(), "polynomial basis of a detached element");
    const FieldPtr& f = g.field();
    const unsigned n = f->degree();
    std::vector<FieldElement> powers;
    powers.reserve(n);
    powers.push_back(f->one());
    for (unsigned i = 1; i < n; ++i) powers.push_back(powers.back() * g);
    if (!is_basis(f, powers)) throw std::invalid_argument("element does not generate the field");
    return OrderedBasis(f, std::move(powers), BasisKind::polynomial);
}

GramMatrix::GramMatrix(Matrix entries) : entries_(std::move(entries)) {
    check(entries_.rows() == entries_.cols(), "Gram matrix must be square");
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = i + 1; j < entries_.cols(); ++j)
            check(entries_.at(i, j) == entries_.at(j, i), "Gram matrix must be symmetric");
}

GramMatrix gram_matrix(const OrderedBasis& basis) {
    const std::size_t n = basis.size();
    Matrix g(base_of(basis.field()), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            FieldElement t = trace(basis[i] * basis[j]);
            g.at(j, i) = t;
            g.at(i, j) = std::move(t);
        }
    return GramMatrix(std::move(g));
}

OrderedBasis dual_basis(const OrderedBasis& basis) {
    const std::size_t n = basis.size();
    Matrix ginv = [&] {
        try {
            return mat_inverse(gram_matrix(basis).entries());
        } catch (const std::invalid_argument&) {
            throw internal_error("Gram matrix of a basis is singular");
        }
    }();
    std::vector<FieldElement> dual;
    dual.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        FieldElement d = basis.field()->zero();
        for (std::size_t k = 0; k < n; ++k) {
            if (ginv.at(j, k).is_zero()) continue;
            d = d + embed(ginv.at(j, k), basis.field()) * basis[k];
        }
        dual.push_back(std::move(d));
    }
    return OrderedBasis(basis.field(), std::move(dual), BasisKind::general);
}

OrderedBasis dual_of_polynomial_basis(const FieldElement& a) {
    require(a.valid(), "dual basis of a detached element");
    const FieldPtr& f = a.field();
    const unsigned n = f->degree();
    const Polynomial minpoly = minimal_polynomial(a);
    require(minpoly.degree() == n, "element does not generate the field");

    // f(x)/(x - a) over the big field, then scale by 1/f'(a)
    std::vector<FieldElement> lifted;
    lifted.reserve(n + 1);
    for (const auto& c : minpoly.coeffs()) lifted.push_back(embed(c, f));
    Polynomial linear(f, {-a, f->one()});
    auto [quotient, remainder] = poly_divrem(Polynomial(f, std::move(lifted)), linear);
    check(remainder.is_zero(), "minimal polynomial is not divisible by x - a");

    const FieldElement fprime_at_a = poly_eval(poly_derivative(minpoly), a);
    check(!fprime_at_a.is_zero(), "derivative of a separable minimal polynomial vanished");
    const FieldElement scale = fprime_at_a.inverse();

    std::vector<FieldElement> dual;
    dual.reserve(n);
    for (unsigned i = 0; i < n; ++i) dual.push_back(quotient.coeff(i) * scale);

    // delta_ij trace conditions against {1, a, ..., a^(n-1)}
    FieldElement power = f->one();
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            const FieldElement t = trace(power * dual[j]);
            check(i == j ? t.is_one() : t.is_zero(),
                  "polynomial-basis dual fails a trace condition");
        }
        power = power * a;
    }
    return OrderedBasis(f, std::move(dual), BasisKind::general);
}

MultTable::MultTable(OrderedBasis basis, Matrix entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
    require(basis_.kind() == BasisKind::normal, "multiplication table needs a normal basis");
    const std::size_t n = basis_.size();
    require(entries_.rows() == n && entries_.cols() == n, "table shape must be n x n");
    require(*entries_.field() == *base_of(basis_.field()),
            "table entries must lie in the base field");
    const FieldElement& a = basis_[0];
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement sum = basis_.field()->zero();
        for (std::size_t j = 0; j < n; ++j) {
            if (entries_.at(i, j).is_zero()) continue;
            sum = sum + embed(entries_.at(i, j), basis_.field()) * basis_[j];
        }
        check(sum == a * basis_[i], "table row does not reconstruct the product");
    }
}

MultTable multiplication_table(const FieldElement& a) {
    OrderedBasis basis = normal_closure(a);
    const std::size_t n = basis.size();
    // one elimination of the coordinate matrix answers all n rows
    const LinearSolver solver(coordinate_matrix(basis.field(), basis.elements()));
    Matrix t(base_of(basis.field()), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = solver.solve(base_coords(a * basis[i]));
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = row[j];
    }
    return MultTable(std::move(basis), std::move(t));
}

std::size_t complexity(const MultTable& table) { return nonzero_count(table.entries()); }

std::optional<FieldElement> scalar_weak_equivalence(const FieldElement& b) {
    const OrderedBasis closure = normal_closure(b); // throws when not normal
    const FieldPtr& f = b.field();
    const unsigned n = f->degree();
    require(minimal_polynomial(b).degree() == n, "element does not generate the field");

    std::vector<FieldElement> powers;
    powers.reserve(n);
    powers.push_back(f->one());
    for (unsigned i = 1; i < n; ++i) powers.push_back(powers.back() * b);

    for (const auto& s : closure.elements()) {
        for (const auto& t : powers) {
            const FieldElement candidate = s / t;
            std::vector<FieldElement> scaled;
            scaled.reserve(n);
            for (const auto& p : powers) scaled.push_back(candidate * p);
            if (same_set(closure.elements(), scaled)) {
                check(candidate == b, "weak-equivalence scalar is not the generator itself");
                return candidate;
            }
        }
    }
    return std::nullopt;
}

} // namespace onb
