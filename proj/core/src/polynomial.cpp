#include "onb/polynomial.hpp"

#include <stdexcept>

#include "raw_poly.hpp"

namespace onb {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check(bool ok, const char* msg) {
    if (!ok) throw internal_error(msg);
}

void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (a.field().get() == b.field().get()) return;
    require(*a.field() == *b.field(), "polynomials over different fields");
}

// h * g mod f, all over the same field
std::vector<FieldElement> mulmod(const FieldPtr& k, const std::vector<FieldElement>& h,
                                 const std::vector<FieldElement>& g,
                                 const std::vector<FieldElement>& f) {
    return detail::divrem(k, detail::mul(k, h, g), f).second;
}

// h^p mod f by square-and-multiply
std::vector<FieldElement> powmod(const FieldPtr& k, std::vector<FieldElement> h, std::uint64_t p,
                                 const std::vector<FieldElement>& f) {
    std::vector<FieldElement> acc{k->one()};
    while (p != 0) {
        if (p & 1) acc = mulmod(k, acc, h, f);
        p >>= 1;
        if (p != 0) h = mulmod(k, h, h, f);
    }
    return acc;
}

} // namespace

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    require(field_ != nullptr, "polynomial over a null field");
    for (const auto& c : coeffs_)
        require(c.valid() && (c.field().get() == field_.get() || *c.field() == *field_),
                "polynomial coefficient belongs to a different field");
    detail::trim(coeffs_);
}

Polynomial Polynomial::zero(FieldPtr field) { return Polynomial(std::move(field), {}); }

Polynomial Polynomial::one(FieldPtr field) {
    auto e = field->one();
    return Polynomial(std::move(field), {std::move(e)});
}

Polynomial Polynomial::monomial(FieldElement c, std::size_t k) {
    FieldPtr f = c.field();
    std::vector<FieldElement> coeffs(k + 1, f->zero());
    coeffs[k] = std::move(c);
    return Polynomial(std::move(f), std::move(coeffs));
}

Polynomial Polynomial::from_integers(const FieldPtr& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (std::int64_t k : coeffs) c.push_back(field->from_signed(k));
    return Polynomial(field, std::move(c));
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

FieldElement Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : field_->zero();
}

FieldElement Polynomial::leading_coeff() const {
    require(!coeffs_.empty(), "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_->zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Polynomial(field_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    return Polynomial(a.field_, detail::mul(a.field_, a.coeffs_, b.coeffs_));
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& e : coeffs_) out.push_back(e * c);
    return Polynomial(field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (*a.field_ != *b.field_) return false;
    return a.coeffs_ == b.coeffs_;
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || !coeffs_[i].is_one()) out += coeffs_[i].str();
        if (i > 0) {
            if (!coeffs_[i].is_one()) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& f, const Polynomial& g) {
    require_same_field(f, g);
    require(!g.is_zero(), "polynomial division by zero");
    auto [q, r] = detail::divrem(f.field(), f.coeffs(), g.coeffs());
    return {Polynomial(f.field(), std::move(q)), Polynomial(f.field(), std::move(r))};
}

Polynomial poly_derivative(const Polynomial& f) {
    if (f.is_zero()) return f;
    std::vector<FieldElement> out;
    out.reserve(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        out.push_back(f.field()->from_integer(i) * f.coeffs()[i]);
    return Polynomial(f.field(), std::move(out));
}

FieldElement poly_eval(const Polynomial& f, const FieldElement& a) {
    require(a.valid(), "evaluation at a detached element");
    const FieldPtr& target = a.field();
    require(is_subfield(f.field(), target), "evaluation point is not in an extension of the coefficient field");
    FieldElement acc = target->zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * a + embed(f.coeffs()[i], target);
    return acc;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    std::vector<FieldElement> r0 = a.coeffs(), r1 = b.coeffs();
    detail::trim(r0);
    detail::trim(r1);
    while (!r1.empty()) {
        auto r = detail::divrem(a.field(), r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    if (!r0.empty() && !r0.back().is_one()) {
        const FieldElement s = r0.back().inverse();
        for (auto& c : r0) c = c * s;
    }
    return Polynomial(a.field(), std::move(r0));
}

bool is_irreducible(const Polynomial& f) {
    require(!f.is_zero() && *f.degree() >= 1, "irreducibility test needs degree >= 1");
    require(f.is_monic(), "irreducibility test needs a monic polynomial");
    const FieldPtr& k = f.field();
    const std::size_t d = *f.degree();
    if (d == 1) return true;

    // x^(q^i) mod f, raising by q = p^m one characteristic power at a time;
    // a factor of degree j <= d/2 would divide gcd(f, x^(q^j) - x)
    const std::vector<FieldElement> x{k->zero(), k->one()};
    std::vector<FieldElement> h = detail::divrem(k, x, f.coeffs()).second;
    for (std::size_t i = 1; i <= d / 2; ++i) {
        for (unsigned j = 0; j < k->degree_over_prime(); ++j)
            h = powmod(k, h, k->characteristic(), f.coeffs());
        Polynomial diff = Polynomial(k, h) - Polynomial(k, x);
        Polynomial g = poly_gcd(f, diff);
        if (g.degree().value_or(0) >= 1) return false;
    }
    return true;
}

Polynomial minimal_polynomial(const FieldElement& a) {
    require(a.valid(), "minimal polynomial of a detached element");
    const FieldPtr& f = a.field();
    if (f->is_prime_field()) return Polynomial(f, {-a, f->one()});

    // product of (x - c) over the distinct conjugates c of a
    std::vector<FieldElement> conjugates{a};
    for (FieldElement c = frobenius(a, 1); c != a; c = frobenius(c, 1))
        conjugates.push_back(c);
    std::vector<FieldElement> prod{f->one()};
    for (const auto& c : conjugates) prod = detail::mul(f, prod, {-c, f->one()});

    const FieldPtr& base = f->base();
    std::vector<FieldElement> coeffs;
    coeffs.reserve(prod.size());
    for (const auto& c : prod) coeffs.push_back(as_base_element(c));
    Polynomial result(base, std::move(coeffs));
    check(poly_eval(result, a).is_zero(), "minimal polynomial does not annihilate its element");
    return result;
}

Polynomial smallest_irreducible(const FieldPtr& field, unsigned degree) {
    require(field != nullptr, "null field handle");
    require(degree >= 1, "degree must be positive");
    const auto card = field->cardinality();
    require(card.has_value(), "field too large to enumerate moduli");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        require(count <= (1ull << 40) / *card, "modulus search space too large");
        count *= *card;
    }
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(degree + 1);
        std::uint64_t rest = code;
        for (unsigned i = 0; i < degree; ++i) {
            coeffs.push_back(element_from_code(field, rest % *card));
            rest /= *card;
        }
        coeffs.push_back(field->one());
        Polynomial candidate(field, std::move(coeffs));
        if (is_irreducible(candidate)) return candidate;
    }
    throw internal_error("no irreducible polynomial found"); // unreachable: they always exist
}

} // namespace onb
