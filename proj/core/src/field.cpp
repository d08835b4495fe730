#include "onb/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "onb/polynomial.hpp"
#include "raw_poly.hpp"

namespace onb {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check(bool ok, const char* msg) {
    if (!ok) throw internal_error(msg);
}

const Field& require_field(const FieldElement& a) {
    require(a.valid(), "operation on a detached field element");
    return *a.field();
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    const Field& fa = require_field(a);
    const Field& fb = require_field(b);
    if (a.field().get() == b.field().get()) return;
    require(fa == fb, "mismatched field descriptors");
}

constexpr std::uint64_t kMaxPrime = (1ull << 31); // keeps p*p inside 64 bits

} // namespace

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr f, std::uint64_t residue)
    : field_(std::move(f)), residue_(residue) {}

FieldElement::FieldElement(FieldPtr f, std::vector<FieldElement> coords)
    : field_(std::move(f)), coords_(std::move(coords)) {}

bool FieldElement::is_zero() const {
    require_field(*this);
    if (field_->is_prime_field()) return residue_ == 0;
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

bool FieldElement::is_one() const {
    require_field(*this);
    if (field_->is_prime_field()) return residue_ == 1;
    if (!coords_[0].is_one()) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

std::uint64_t FieldElement::residue() const {
    require(require_field(*this).is_prime_field(), "residue() on an extension element");
    return residue_;
}

const std::vector<FieldElement>& FieldElement::coords() const {
    require(!require_field(*this).is_prime_field(), "coords() on a prime-field element");
    return coords_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (a.field_->is_prime_field()) {
        const std::uint64_t p = a.field_->characteristic();
        return FieldElement(a.field_, (a.residue_ + b.residue_) % p);
    }
    std::vector<FieldElement> out;
    out.reserve(a.coords_.size());
    for (std::size_t i = 0; i < a.coords_.size(); ++i) out.push_back(a.coords_[i] + b.coords_[i]);
    return FieldElement(a.field_, std::move(out));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (a.field_->is_prime_field()) {
        const std::uint64_t p = a.field_->characteristic();
        return FieldElement(a.field_, (a.residue_ + p - b.residue_) % p);
    }
    std::vector<FieldElement> out;
    out.reserve(a.coords_.size());
    for (std::size_t i = 0; i < a.coords_.size(); ++i) out.push_back(a.coords_[i] - b.coords_[i]);
    return FieldElement(a.field_, std::move(out));
}

FieldElement FieldElement::operator-() const {
    require_field(*this);
    if (field_->is_prime_field())
        return FieldElement(field_, residue_ == 0 ? 0 : field_->characteristic() - residue_);
    std::vector<FieldElement> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(-c);
    return FieldElement(field_, std::move(out));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    if (a.field_->is_prime_field()) {
        const std::uint64_t p = a.field_->characteristic();
        return FieldElement(a.field_, (a.residue_ * b.residue_) % p);
    }
    const Field& f = *a.field_;
    const FieldPtr& base = f.base();
    const unsigned d = f.degree();
    // schoolbook product, then reduction by the monic modulus
    std::vector<FieldElement> conv(2 * d - 1, base->zero());
    for (unsigned i = 0; i < d; ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (b.coords_[j].is_zero()) continue;
            conv[i + j] = conv[i + j] + a.coords_[i] * b.coords_[j];
        }
    }
    const std::vector<FieldElement>& m = f.modulus_coeffs();
    for (std::size_t k = conv.size(); k-- > d;) {
        if (conv[k].is_zero()) continue;
        const FieldElement c = conv[k];
        for (unsigned j = 0; j < d; ++j)
            conv[k - d + j] = conv[k - d + j] - c * m[j];
        conv[k] = base->zero();
    }
    conv.resize(d);
    return FieldElement(a.field_, std::move(conv));
}

FieldElement FieldElement::inverse() const {
    require_field(*this);
    require(!is_zero(), "division by zero");
    if (field_->is_prime_field()) {
        // extended Euclid on (residue, p)
        std::int64_t r0 = static_cast<std::int64_t>(field_->characteristic());
        std::int64_t r1 = static_cast<std::int64_t>(residue_);
        std::int64_t t0 = 0, t1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            t0 -= q * t1;
            std::swap(t0, t1);
        }
        const std::int64_t p = static_cast<std::int64_t>(field_->characteristic());
        return FieldElement(field_, static_cast<std::uint64_t>(((t0 % p) + p) % p));
    }
    // extended Euclid on the residue representative and the modulus
    auto res = detail::xgcd(field_->base(), coords_, field_->modulus_coeffs());
    check(res.g.size() == 1 && res.g[0].is_one(), "modulus not coprime to a nonzero residue");
    res.u.resize(field_->degree(), field_->base()->zero());
    return FieldElement(field_, std::move(res.u));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::pow(std::uint64_t k) const {
    const Field& f = require_field(*this);
    FieldElement acc = f.one();
    FieldElement sq = *this;
    while (k != 0) {
        if (k & 1) acc = acc * sq;
        k >>= 1;
        if (k != 0) sq = sq * sq;
    }
    return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.valid() || !b.valid()) return a.valid() == b.valid();
    if (a.field_.get() != b.field_.get() && *a.field_ != *b.field_) return false;
    if (a.field_->is_prime_field()) return a.residue_ == b.residue_;
    return a.coords_ == b.coords_;
}

std::string FieldElement::str() const {
    require_field(*this);
    if (field_->is_prime_field()) return std::to_string(residue_);
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += coords_[i].str();
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::prime(std::uint64_t p) {
    require(p < kMaxPrime, "prime modulus too large");
    require(is_prime_u64(p), "modulus is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->char_ = p;
    return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<FieldElement> modulus) {
    require(base != nullptr, "extension over a null field");
    detail::trim(modulus);
    require(modulus.size() >= 3, "extension modulus must have degree >= 2");
    for (const auto& c : modulus)
        require(c.valid() && (c.field().get() == base.get() || *c.field() == *base),
                "modulus coefficients must belong to the base field");
    require(modulus.back().is_one(), "extension modulus must be monic");
    require(is_irreducible(Polynomial(base, modulus)), "extension modulus is reducible");

    auto f = std::shared_ptr<Field>(new Field());
    f->base_ = std::move(base);
    f->char_ = f->base_->characteristic();
    f->degree_ = static_cast<unsigned>(modulus.size() - 1);
    f->degree_over_prime_ = f->degree_ * f->base_->degree_over_prime();
    f->modulus_ = std::move(modulus);
    return f;
}

FieldPtr Field::prime_power(std::uint64_t p, unsigned m) {
    require(m >= 1, "prime power exponent must be positive");
    FieldPtr fp = prime(p);
    if (m == 1) return fp;
    Polynomial mod = smallest_irreducible(fp, m);
    return extension(fp, mod.coeffs());
}

const FieldPtr& Field::base() const {
    require(base_ != nullptr, "prime field has no base field");
    return base_;
}

const std::vector<FieldElement>& Field::modulus_coeffs() const {
    require(base_ != nullptr, "prime field has no modulus");
    return modulus_;
}

std::optional<std::uint64_t> Field::cardinality() const {
    std::uint64_t card = 1;
    for (unsigned i = 0; i < degree_over_prime_; ++i) {
        if (card > std::numeric_limits<std::uint64_t>::max() / char_) return std::nullopt;
        card *= char_;
    }
    return card;
}

FieldElement Field::zero() const { return from_integer(0); }
FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(std::uint64_t k) const {
    if (is_prime_field()) return FieldElement(shared_from_this(), k % char_);
    std::vector<FieldElement> coords(degree_, base_->zero());
    coords[0] = base_->from_integer(k);
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement Field::from_signed(std::int64_t k) const {
    const std::int64_t p = static_cast<std::int64_t>(char_);
    return from_integer(static_cast<std::uint64_t>(((k % p) + p) % p));
}

FieldElement Field::element(std::vector<FieldElement> coords) const {
    if (is_prime_field()) {
        require(coords.size() == 1, "prime-field element takes one coordinate");
        require(coords[0].valid() && *coords[0].field() == *this,
                "coordinate belongs to a different field");
        return coords[0];
    }
    require(coords.size() <= degree_, "coordinate vector longer than the extension degree");
    for (const auto& c : coords)
        require(c.valid() && (c.field().get() == base_.get() || *c.field() == *base_),
                "coordinate belongs to a different field");
    coords.resize(degree_, base_->zero());
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement Field::element_from_integers(const std::vector<std::int64_t>& coords) const {
    require(!is_prime_field() || coords.size() == 1, "prime-field element takes one coordinate");
    std::vector<FieldElement> c;
    c.reserve(coords.size());
    for (std::int64_t k : coords)
        c.push_back(is_prime_field() ? from_signed(k) : base_->from_signed(k));
    return element(std::move(c));
}

FieldElement Field::adjoined_root() const {
    require(base_ != nullptr, "prime field has no adjoined root");
    std::vector<FieldElement> coords(degree_, base_->zero());
    coords[1] = base_->one();
    return FieldElement(shared_from_this(), std::move(coords));
}

bool operator==(const Field& a, const Field& b) {
    if (&a == &b) return true;
    if (a.is_prime_field() != b.is_prime_field()) return false;
    if (a.is_prime_field()) return a.char_ == b.char_;
    if (a.degree_ != b.degree_ || *a.base_ != *b.base_) return false;
    for (std::size_t i = 0; i < a.modulus_.size(); ++i)
        if (a.modulus_[i] != b.modulus_[i]) return false;
    return true;
}

std::string Field::str() const {
    if (is_prime_field()) return "GF(" + std::to_string(char_) + ")";
    std::ostringstream os;
    os << "GF(" << char_ << "^" << degree_over_prime_ << ") = " << base_->str() << "[x]/";
    os << "[";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ",";
        os << modulus_[i].str();
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Frobenius / trace / tower maps

namespace {

// a^p for the field characteristic p
FieldElement char_power(const FieldElement& a) { return a.pow(a.field()->characteristic()); }

// a^q where q is the order of the immediate base field
FieldElement base_order_power(const FieldElement& a) {
    const unsigned m = a.field()->is_prime_field() ? 1 : a.field()->base()->degree_over_prime();
    FieldElement r = a;
    for (unsigned i = 0; i < m; ++i) r = char_power(r);
    return r;
}

} // namespace

FieldElement frobenius(const FieldElement& a, unsigned i) {
    const Field& f = require_field(a);
    if (f.is_prime_field()) return a; // a^(p^i) = a
    FieldElement r = a;
    for (unsigned k = 0; k < i % f.degree(); ++k) r = base_order_power(r);
    return r;
}

FieldElement trace_direct(const FieldElement& a) {
    const Field& f = require_field(a);
    if (f.is_prime_field()) return a;
    FieldElement conj = a;
    FieldElement sum = a;
    for (unsigned i = 1; i < f.degree(); ++i) {
        conj = base_order_power(conj);
        sum = sum + conj;
    }
    return as_base_element(sum);
}

const std::vector<FieldElement>& Field::monomial_traces() const {
    std::call_once(trace_once_, [this] {
        std::vector<FieldElement> tr;
        tr.reserve(degree_);
        const FieldElement x = adjoined_root();
        for (unsigned k = 0; k < degree_; ++k) tr.push_back(trace_direct(x.pow(k)));
        monomial_traces_ = std::move(tr);
    });
    return monomial_traces_;
}

FieldElement trace(const FieldElement& a) {
    const Field& f = require_field(a);
    if (f.is_prime_field()) return a;
    // trace is linear over the base field, so combine cached monomial traces
    const std::vector<FieldElement>& tr = f.monomial_traces();
    FieldElement sum = f.base()->zero();
    for (unsigned k = 0; k < f.degree(); ++k) {
        if (a.coords()[k].is_zero()) continue;
        sum = sum + a.coords()[k] * tr[k];
    }
    return sum;
}

bool is_subfield(const FieldPtr& sub, const FieldPtr& f) {
    require(sub != nullptr && f != nullptr, "null field handle");
    const Field* cur = f.get();
    while (true) {
        if (cur == sub.get() || *cur == *sub) return true;
        if (cur->is_prime_field()) return false;
        cur = cur->base().get();
    }
}

FieldElement embed(const FieldElement& a, const FieldPtr& into) {
    require_field(a);
    require(into != nullptr, "null target field");
    if (a.field().get() == into.get() || *a.field() == *into) return a;
    require(is_subfield(a.field(), into), "element does not embed into the target field");
    std::vector<FieldElement> coords(into->degree(), into->base()->zero());
    coords[0] = embed(a, into->base());
    return into->element(std::move(coords));
}

bool lies_in_base(const FieldElement& a) {
    const Field& f = require_field(a);
    require(!f.is_prime_field(), "prime field has no base field");
    return std::all_of(a.coords().begin() + 1, a.coords().end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

FieldElement as_base_element(const FieldElement& a) {
    check(lies_in_base(a), "element expected in the base field has higher coordinates");
    return a.coords()[0];
}

std::uint64_t element_code(const FieldElement& a) {
    const Field& f = require_field(a);
    if (f.is_prime_field()) return a.residue();
    const auto base_card = f.base()->cardinality();
    require(base_card.has_value() && f.cardinality().has_value(),
            "field too large for integer element codes");
    std::uint64_t code = 0;
    for (std::size_t i = a.coords().size(); i-- > 0;)
        code = code * *base_card + element_code(a.coords()[i]);
    return code;
}

FieldElement element_from_code(const FieldPtr& field, std::uint64_t code) {
    require(field != nullptr, "null field handle");
    const auto card = field->cardinality();
    require(card.has_value() && code < *card, "element code out of range");
    if (field->is_prime_field()) return field->from_integer(code);
    const std::uint64_t base_card = *field->base()->cardinality();
    std::vector<FieldElement> coords;
    coords.reserve(field->degree());
    for (unsigned i = 0; i < field->degree(); ++i) {
        coords.push_back(element_from_code(field->base(), code % base_card));
        code /= base_card;
    }
    return field->element(std::move(coords));
}

std::vector<FieldElement> all_elements(const FieldPtr& field) {
    require(field != nullptr, "null field handle");
    const auto card = field->cardinality();
    require(card.has_value() && *card <= (1ull << 20), "field too large to enumerate");
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(*card));
    for (std::uint64_t c = 0; c < *card; ++c) out.push_back(element_from_code(field, c));
    return out;
}

} // namespace onb
