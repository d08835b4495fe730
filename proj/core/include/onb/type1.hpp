#ifndef ONB_TYPE1_HPP
#define ONB_TYPE1_HPP

#include <cstddef>
#include <vector>

#include "onb/basis.hpp"
#include "onb/field.hpp"
#include "onb/matrix.hpp"
#include "onb/polynomial.hpp"

namespace onb {

/// Validated parameters of a type I optimal normal basis: n+1 prime and the
/// order of q modulo n+1 equal to n.
struct Type1Params {
    FieldPtr q_field; // F_q
    unsigned n = 0;
    unsigned n_plus_1 = 0;
};

/// Checks n >= 2, primality of n+1 and primitivity of q = |q_field| modulo
/// n+1 (throws std::invalid_argument with the specific reason otherwise).
Type1Params validate_type1_params(const FieldPtr& q_field, unsigned n);

/// F_(q^n) presented as F_q[x]/(1 + x + ... + x^n), together with the residue
/// class of x.  Its Frobenius orbit is the set of nonunit (n+1)-th roots of
/// unity and forms an optimal normal basis.
struct Type1Field {
    Type1Params params;
    FieldPtr field;     // F_(q^n)
    FieldElement alpha; // residue of x; alpha^(n+1) = 1, alpha != 1
};

/// Builds the quotient field and verifies the construction: the modulus is
/// irreducible, alpha is a nonunit (n+1)-th root of unity whose orbit is
/// {alpha, alpha^2, ..., alpha^n}, and the basis complexity is exactly 2n-1.
Type1Field build_type1(const Type1Params& params);

/// The common value of alpha * f'(alpha) (direct evaluation) and
/// (n+1)/(alpha - 1) (closed form), where f = 1 + x + ... + x^n.  The two
/// routes are computed independently and checked against each other.
FieldElement alpha_times_fprime(const Type1Field& tf);

/// Coefficients beta_i of f(x)/(x - alpha) by the closed form
/// (alpha^(n-i) - 1)/(alpha - 1), checked against the long-division quotient.
std::vector<FieldElement> dual_quotient_coeffs(const Type1Field& tf);

/// Dual basis of the normal basis N = {alpha^(q^j)}, index-aligned: the
/// element dual to alpha^(q^j) is (alpha^(-q^j) - 1)/(n+1).  The delta_ij
/// trace conditions and elementwise agreement with the Gram-matrix dual are
/// checked before returning.
OrderedBasis closed_form_dual(const Type1Field& tf);

/// Generator (alpha - 1)/(n+1) of the dual basis; its Frobenius orbit is
/// checked to equal closed_form_dual as a set.
FieldElement dual_generator(const Type1Field& tf);

/// Minimal polynomial of the dual generator over F_q: the x^j coefficient is
/// (sum of binomial(i, j) for j <= i <= n) / (n+1)^(n-j).  Binomials are
/// accumulated modulo the characteristic (Pascal's rule commutes with the
/// reduction).  Checked to annihilate the dual generator and to equal its
/// conjugate-product minimal polynomial.
Polynomial dual_min_poly(const Type1Field& tf);

/// Permutation with q^i mod (n+1) at 1-based position i+1; fixes 1 and is a
/// bijection of {1..n} because q is primitive modulo n+1.
struct PermutationP {
    std::vector<unsigned> one_line; // one_line[i] = q^i mod (n+1), values 1..n
};

PermutationP table_permutation(const Type1Params& params);

/// Permutation matrix P over F_q with row i carrying a 1 in column
/// one_line[i] - 1, so that P * (1, ..., n)^T = (q^0, ..., q^(n-1))^T
/// modulo n+1.
Matrix permutation_matrix(const Type1Params& params);

/// Multiplication table of the primal basis in structured form P * C * P^-1
/// with C = ones on the superdiagonal and -1 across the last row; checked
/// entrywise against the brute-force table.
MultTable structured_table_primal(const Type1Field& tf);

/// Multiplication table of the dual basis in structured form
/// (1/(n+1)) * P * D * P^-1 with D[0][0] = -2, -1 on the rest of the
/// diagonal and of the first column, and 1 on the superdiagonal; checked
/// entrywise against the brute-force table.
MultTable structured_table_dual(const Type1Field& tf);

/// Outcome of one (q, n) verification: brute-force complexity of the primal
/// and dual bases, the expected dual count (3n-3 in characteristic 2, 3n-2
/// otherwise), and whether the structured tables matched.
struct DualComplexityReport {
    std::size_t c_primal = 0;
    std::size_t c_dual = 0;
    std::size_t expected_dual = 0;
    bool structured_match = false;
    bool pass = false;
};

DualComplexityReport verify_dual_complexity(const Type1Params& params);

} // namespace onb

#endif
