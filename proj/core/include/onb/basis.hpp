#ifndef ONB_BASIS_HPP
#define ONB_BASIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "onb/field.hpp"
#include "onb/matrix.hpp"

namespace onb {

enum class BasisKind { polynomial, normal, general };

/// Ordered basis of an extension field over its immediate base.  Construction
/// verifies linear independence (rank of the coordinate matrix) and the
/// kind-specific shape: a normal basis is the Frobenius orbit of its first
/// element, a polynomial basis is {1, g, g^2, ...}.
class OrderedBasis {
  public:
    OrderedBasis(FieldPtr field, std::vector<FieldElement> elements, BasisKind kind);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& elements() const { return elements_; }
    BasisKind kind() const { return kind_; }
    std::size_t size() const { return elements_.size(); }
    const FieldElement& operator[](std::size_t i) const { return elements_[i]; }

    friend bool operator==(const OrderedBasis& a, const OrderedBasis& b) {
        return a.elements_ == b.elements_;
    }
    friend bool operator!=(const OrderedBasis& a, const OrderedBasis& b) { return !(a == b); }

  private:
    FieldPtr field_;
    std::vector<FieldElement> elements_;
    BasisKind kind_;
};

/// Matrix of trace(b_i * b_j) over the base field; symmetric, and invertible
/// exactly when the generating family is a basis (the trace form is
/// nondegenerate).
class GramMatrix {
  public:
    explicit GramMatrix(Matrix entries);
    const Matrix& entries() const { return entries_; }

  private:
    Matrix entries_;
};

/// Multiplication table of a normal basis: row i holds the base-field
/// coordinates of a * a^(q^i) in the basis {a^(q^j)}.  The reconstruction
/// identity is checked on construction.
class MultTable {
  public:
    MultTable(OrderedBasis basis, Matrix entries);

    std::size_t n() const { return basis_.size(); }
    const Matrix& entries() const { return entries_; }
    const FieldElement& generator() const { return basis_[0]; }
    const OrderedBasis& basis() const { return basis_; }

  private:
    OrderedBasis basis_;
    Matrix entries_;
};

/// Coordinates of an element over the immediate base field (the power-basis
/// coordinates of the quotient-ring representative).
std::vector<FieldElement> base_coords(const FieldElement& a);

/// Column-per-element coordinate matrix over the base field.
Matrix coordinate_matrix(const FieldPtr& field, const std::vector<FieldElement>& elems);

/// True iff the n given elements of F_(q^n) are linearly independent over F_q.
bool is_basis(const FieldPtr& field, const std::vector<FieldElement>& elems);

/// The Frobenius orbit {a, a^q, ..., a^(q^(n-1))} as a normal basis; throws
/// std::invalid_argument("not a normal element") when the orbit is dependent.
OrderedBasis normal_closure(const FieldElement& a);

/// {1, g, ..., g^(n-1)}; throws when g does not generate the field.
OrderedBasis polynomial_basis(const FieldElement& g);

GramMatrix gram_matrix(const OrderedBasis& basis);

/// Dual basis through the Gram matrix of the trace form: d_j = sum_k
/// (G^-1)_jk b_k, index-aligned (trace(b_i * d_j) = delta_ij).  This is the
/// generic route, independent of any closed form, and serves as the
/// cross-check oracle for them.
OrderedBasis dual_basis(const OrderedBasis& basis);

/// Dual of the polynomial basis {1, a, ..., a^(n-1)} from the quotient
/// f(x)/(x - a) = sum beta_i x^i of the minimal polynomial f of a: the dual
/// is {beta_i / f'(a)}.  The delta_ij trace conditions are checked before
/// returning.
OrderedBasis dual_of_polynomial_basis(const FieldElement& a);

/// Multiplication table of the normal basis generated by a; throws when a is
/// not a normal element.
MultTable multiplication_table(const FieldElement& a);

/// Number of nonzero entries of the table.
std::size_t complexity(const MultTable& table);

/// Searches for a scalar c (over the big field) with {b^(q^i)} = c * {b^i}
/// as sets.  Requires b to be both a normal element and a field generator.
/// Candidates are quotients of one member of each set; a successful match is
/// returned (and is necessarily b itself).
std::optional<FieldElement> scalar_weak_equivalence(const FieldElement& b);

} // namespace onb

#endif
