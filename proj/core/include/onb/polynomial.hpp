#ifndef ONB_POLYNOMIAL_HPP
#define ONB_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onb/field.hpp"

namespace onb {

/// Dense polynomial over one coefficient field, lowest power first, kept in
/// canonical form: the highest stored coefficient is nonzero and the zero
/// polynomial stores no coefficients at all (its degree is a distinct
/// "minus infinity" sentinel, surfaced as std::nullopt).
class Polynomial {
  public:
    /// Canonicalizes (trims trailing zeros).  All coefficients must belong
    /// to `field`.
    Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);

    static Polynomial zero(FieldPtr field);
    static Polynomial one(FieldPtr field);
    /// c * x^k
    static Polynomial monomial(FieldElement c, std::size_t k);
    /// Coefficients given as integers via Field::from_signed, lowest first.
    static Polynomial from_integers(const FieldPtr& field, const std::vector<std::int64_t>& coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    /// coefficient of x^k (zero beyond the stored range)
    FieldElement coeff(std::size_t k) const;
    FieldElement leading_coeff() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial operator*(const FieldElement& c) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// "x^2 + [1,1]*x + 1" style rendering
    std::string str() const;

  private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

/// Exact division with remainder: f = q*g + r, deg r < deg g.  g must be
/// nonzero.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& f, const Polynomial& g);

/// Formal derivative; the x^(i-1) coefficient is i * f_i in the coefficient
/// field.
Polynomial poly_derivative(const Polynomial& f);

/// Horner evaluation.  `a` may live in any extension of the coefficient
/// field; coefficients are embedded as needed.
FieldElement poly_eval(const Polynomial& f, const FieldElement& a);

/// Monic gcd (Euclid); gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Irreducibility over the coefficient field by the distinct-degree
/// criterion: f of degree d is irreducible iff gcd(f, x^(q^i) - x) = 1 for
/// all 1 <= i <= d/2.  Requires f monic of degree >= 1.
bool is_irreducible(const Polynomial& f);

/// Monic least-degree polynomial over the immediate base field annihilating
/// a, computed as the product of (x - c) over the distinct conjugates c of a.
/// Coefficients are checked to land in the base field.
Polynomial minimal_polynomial(const FieldElement& a);

/// Lexicographically smallest monic irreducible of the given degree over
/// `field` (non-leading coefficients enumerated as base-|field| digits,
/// most significant digit = highest power).  Degree >= 1; field must be
/// small enough to enumerate.
Polynomial smallest_irreducible(const FieldPtr& field, unsigned degree);

} // namespace onb

#endif
