#ifndef ONB_FIELD_HPP
#define ONB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace onb {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Thrown by internal consistency checks.  Seeing one of these means a bug in
/// the library (or a violated construction invariant), not bad user input.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// An element of a finite field, always stored reduced.  Prime-field elements
/// hold a residue in [0, p); extension elements hold their coordinate vector
/// over the immediate base field (length = extension degree, lowest power
/// first).  Elements are immutable values: every operation returns a fresh
/// reduced element, so concurrent use needs no locking.
class FieldElement {
  public:
    /// Detached element; any arithmetic on it throws.  Exists so the type is
    /// usable inside std containers and std::optional.
    FieldElement() = default;

    const FieldPtr& field() const { return field_; }
    bool valid() const { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    /// Residue in [0, p).  Prime-field elements only.
    std::uint64_t residue() const;
    /// Coordinates over the immediate base field.  Extension elements only.
    const std::vector<FieldElement>& coords() const;

    FieldElement operator-() const;
    FieldElement inverse() const;
    /// a^k by square-and-multiply; 0^0 = 1.
    FieldElement pow(std::uint64_t k) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Compact human-readable rendering: "3" or "[1,0,1]".
    std::string str() const;

  private:
    friend class Field;
    FieldElement(FieldPtr f, std::uint64_t residue);
    FieldElement(FieldPtr f, std::vector<FieldElement> coords);

    FieldPtr field_;
    std::uint64_t residue_ = 0;        // prime fields
    std::vector<FieldElement> coords_; // extensions; size == degree
};

/// A finite field: either Z/p for a prime p, or a quotient base[x]/(m) for a
/// monic irreducible m over an already constructed base field.  Fields are
/// handled through shared_ptr<const Field> and are immutable; equality is
/// structural, so independently constructed identical descriptors compare
/// equal and their elements interoperate.
class Field : public std::enable_shared_from_this<Field> {
  public:
    /// The prime field Z/p.  p is checked for primality by trial division.
    static FieldPtr prime(std::uint64_t p);

    /// base[x]/(modulus) with modulus monic irreducible of degree >= 2,
    /// given lowest power first as elements of `base`.
    static FieldPtr extension(FieldPtr base, std::vector<FieldElement> modulus);

    /// F_{p^m}.  For m >= 2 the modulus is the lexicographically smallest
    /// monic irreducible of degree m over F_p (non-leading coefficients read
    /// as a base-p number, most significant digit = highest power);
    /// m == 1 gives the prime field.
    static FieldPtr prime_power(std::uint64_t p, unsigned m);

    bool is_prime_field() const { return base_ == nullptr; }
    std::uint64_t characteristic() const { return char_; }
    /// Extension degree over the immediate base; 1 for prime fields.
    unsigned degree() const { return degree_; }
    unsigned degree_over_prime() const { return degree_over_prime_; }
    /// Immediate base field; throws for prime fields.
    const FieldPtr& base() const;
    /// Modulus coefficients, lowest first, degree()+1 entries.  Extensions only.
    const std::vector<FieldElement>& modulus_coeffs() const;
    /// Number of elements, when it fits in 64 bits.
    std::optional<std::uint64_t> cardinality() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// Image of k under the canonical map Z -> F.
    FieldElement from_integer(std::uint64_t k) const;
    FieldElement from_signed(std::int64_t k) const;
    /// Element from coordinates over the immediate base; at most degree()
    /// entries, padded with zeros.  For prime fields a single prime-field
    /// coordinate is accepted.
    FieldElement element(std::vector<FieldElement> coords) const;
    /// Convenience for prime-based fields: coordinates given as integers.
    FieldElement element_from_integers(const std::vector<std::int64_t>& coords) const;
    /// The residue class of x, i.e. the adjoined root of the modulus.
    /// Extensions only.
    FieldElement adjoined_root() const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    /// e.g. "GF(2)" or "GF(2^4) = GF(2)[x]/[1,1,1,1,1]".
    std::string str() const;

  private:
    Field() = default;
    friend FieldElement trace(const FieldElement& a);

    const std::vector<FieldElement>& monomial_traces() const;

    FieldPtr base_;                     // null for prime fields
    std::vector<FieldElement> modulus_; // monic, lowest first
    std::uint64_t char_ = 0;
    unsigned degree_ = 1;
    unsigned degree_over_prime_ = 1;

    mutable std::once_flag trace_once_;
    mutable std::vector<FieldElement> monomial_traces_; // trace(x^k), k < degree
};

/// a^(q^i) where q is the order of the immediate base field of a's field.
/// i is reduced modulo the extension degree.  Identity on prime fields.
FieldElement frobenius(const FieldElement& a, unsigned i);

/// Trace onto the immediate base field: sum of a^(q^i) over 0 <= i < n.
/// Uses cached traces of the power-basis monomials (trace is linear over the
/// base); the summation itself is done once per monomial per field.
FieldElement trace(const FieldElement& a);

/// Trace computed directly from the defining conjugate sum.  Slow path, kept
/// as a cross-check for trace().
FieldElement trace_direct(const FieldElement& a);

/// True when `sub` appears in the tower under `f` (or equals it).
bool is_subfield(const FieldPtr& sub, const FieldPtr& f);

/// Image of a under the tower inclusion into `into`.
FieldElement embed(const FieldElement& a, const FieldPtr& into);

/// True when an extension element has all higher coordinates zero.
bool lies_in_base(const FieldElement& a);

/// Extract the base-field value of an element with lies_in_base(a).
/// Throws internal_error otherwise (callers use it to assert membership).
FieldElement as_base_element(const FieldElement& a);

/// Positional integer code of an element: the residue for prime fields,
/// sum of code(coord_i) * |base|^i for extensions.  Requires the field
/// order to fit in 64 bits.
std::uint64_t element_code(const FieldElement& a);

/// Inverse of element_code.
FieldElement element_from_code(const FieldPtr& field, std::uint64_t code);

/// All field elements in code order.  Enumeration fields only (order must
/// fit in 64 bits and stay desk-scale).
std::vector<FieldElement> all_elements(const FieldPtr& field);

} // namespace onb

#endif
