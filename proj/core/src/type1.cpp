#include "onb/type1.hpp"

#include <algorithm>
#include <stdexcept>

namespace onb {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check(bool ok, const char* msg) {
    if (!ok) throw internal_error(msg);
}

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// all-ones modulus 1 + x + ... + x^n over F_q
Polynomial roots_of_unity_modulus(const FieldPtr& q_field, unsigned n) {
    return Polynomial(q_field, std::vector<FieldElement>(n + 1, q_field->one()));
}

// n+1 as an element of the big field
FieldElement n_plus_1_in(const Type1Field& tf) {
    return embed(tf.params.q_field->from_integer(tf.params.n_plus_1), tf.field);
}

bool same_set(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

} // namespace

Type1Params validate_type1_params(const FieldPtr& q_field, unsigned n) {
    require(q_field != nullptr, "null field handle");
    require(n >= 2, "n < 2 unsupported");
    const std::uint64_t m = n + 1;
    require(is_prime_u64(m), "n+1 not prime");
    const auto q = q_field->cardinality();
    require(q.has_value(), "base field too large");
    // order of q modulo n+1 must be n
    std::uint64_t r = *q % m;
    unsigned order = 0;
    if (r != 0) {
        std::uint64_t acc = 1;
        do {
            acc = acc * r % m;
            ++order;
        } while (acc != 1 && order <= n);
    }
    require(r != 0 && order == n, "q not primitive mod n+1");
    return Type1Params{q_field, n, static_cast<unsigned>(m)};
}

Type1Field build_type1(const Type1Params& params) {
    require(params.q_field != nullptr && params.n >= 2, "parameters not validated");
    const Polynomial modulus = roots_of_unity_modulus(params.q_field, params.n);
    FieldPtr field = [&] {
        try {
            return Field::extension(params.q_field, modulus.coeffs());
        } catch (const std::invalid_argument& e) {
            // primitivity of q guarantees irreducibility; reaching this means
            // the parameters were not validated
            throw internal_error(std::string("type-1 modulus rejected: ") + e.what());
        }
    }();
    Type1Field tf{params, field, field->adjoined_root()};

    check(tf.alpha.pow(params.n_plus_1).is_one() && !tf.alpha.is_one(),
          "alpha is not a nonunit root of unity");
    const OrderedBasis closure = normal_closure(tf.alpha);
    std::vector<FieldElement> low_powers;
    low_powers.reserve(params.n);
    FieldElement p = tf.alpha;
    for (unsigned i = 1; i <= params.n; ++i, p = p * tf.alpha) low_powers.push_back(p);
    check(same_set(closure.elements(), low_powers),
          "Frobenius orbit is not {alpha, ..., alpha^n}");
    check(complexity(multiplication_table(tf.alpha)) == 2 * params.n - 1,
          "primal basis is not optimal");
    return tf;
}

FieldElement alpha_times_fprime(const Type1Field& tf) {
    const Polynomial f = roots_of_unity_modulus(tf.params.q_field, tf.params.n);
    const FieldElement direct = tf.alpha * poly_eval(poly_derivative(f), tf.alpha);
    const FieldElement closed = n_plus_1_in(tf) / (tf.alpha - tf.field->one());
    check(direct == closed, "alpha * f'(alpha) disagrees with (n+1)/(alpha-1)");
    return direct;
}

std::vector<FieldElement> dual_quotient_coeffs(const Type1Field& tf) {
    const unsigned n = tf.params.n;
    const FieldElement denom_inv = (tf.alpha - tf.field->one()).inverse();
    std::vector<FieldElement> closed;
    closed.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        closed.push_back((tf.alpha.pow(n - i) - tf.field->one()) * denom_inv);

    // long-division oracle: quotient of (1 + x + ... + x^n) / (x - alpha)
    std::vector<FieldElement> lifted(n + 1, tf.field->one());
    auto [quotient, remainder] =
        poly_divrem(Polynomial(tf.field, std::move(lifted)), Polynomial(tf.field, {-tf.alpha, tf.field->one()}));
    check(remainder.is_zero(), "alpha is not a root of the all-ones modulus");
    for (unsigned i = 0; i < n; ++i)
        check(closed[i] == quotient.coeff(i), "closed-form quotient coefficient mismatch");
    return closed;
}

OrderedBasis closed_form_dual(const Type1Field& tf) {
    const unsigned n = tf.params.n;
    const FieldElement np1_inv = n_plus_1_in(tf).inverse();
    const FieldElement one = tf.field->one();

    std::vector<FieldElement> dual;
    dual.reserve(n);
    for (unsigned j = 0; j < n; ++j)
        dual.push_back((frobenius(tf.alpha, j).inverse() - one) * np1_inv);
    OrderedBasis result(tf.field, std::move(dual), BasisKind::normal);

    const OrderedBasis primal = normal_closure(tf.alpha);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            const FieldElement t = trace(primal[i] * result[j]);
            check(i == j ? t.is_one() : t.is_zero(), "closed-form dual fails a trace condition");
        }
    check(result.elements() == dual_basis(primal).elements(),
          "closed-form dual disagrees with the Gram-matrix dual");
    return result;
}

FieldElement dual_generator(const Type1Field& tf) {
    const FieldElement gen = (tf.alpha - tf.field->one()) * n_plus_1_in(tf).inverse();
    check(same_set(normal_closure(gen).elements(), closed_form_dual(tf).elements()),
          "dual generator orbit is not the dual basis");
    return gen;
}

Polynomial dual_min_poly(const Type1Field& tf) {
    const unsigned n = tf.params.n;
    const FieldPtr& q_field = tf.params.q_field;
    const std::uint64_t p = q_field->characteristic();

    // binomial(i, j) mod p for i <= n via Pascal's rule
    std::vector<std::vector<std::uint64_t>> binom(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        binom[i].assign(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) binom[i][j] = (binom[i - 1][j - 1] + binom[i - 1][j]) % p;
    }

    const FieldElement np1 = q_field->from_integer(tf.params.n_plus_1);
    std::vector<FieldElement> coeffs;
    coeffs.reserve(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        std::uint64_t sum = 0;
        for (unsigned i = j; i <= n; ++i) sum = (sum + binom[i][j]) % p;
        coeffs.push_back(q_field->from_integer(sum) * np1.pow(n - j).inverse());
    }
    Polynomial result(q_field, std::move(coeffs));

    check(result.is_monic() && result.degree() == n, "dual minimal polynomial has the wrong shape");
    const FieldElement gen = (tf.alpha - tf.field->one()) * n_plus_1_in(tf).inverse();
    check(poly_eval(result, gen).is_zero(), "dual minimal polynomial does not vanish at its root");
    check(result == minimal_polynomial(gen),
          "dual minimal polynomial disagrees with the conjugate product");
    return result;
}

PermutationP table_permutation(const Type1Params& params) {
    const std::uint64_t m = params.n_plus_1;
    const std::uint64_t q = *params.q_field->cardinality() % m;
    std::vector<unsigned> line;
    line.reserve(params.n);
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < params.n; ++i) {
        line.push_back(static_cast<unsigned>(acc));
        acc = acc * q % m;
    }
    check(line[0] == 1, "permutation must fix 1");
    std::vector<bool> seen(params.n + 1, false);
    for (unsigned v : line) {
        check(v >= 1 && v <= params.n && !seen[v], "permutation is not a bijection");
        seen[v] = true;
    }
    return PermutationP{std::move(line)};
}

Matrix permutation_matrix(const Type1Params& params) {
    const PermutationP perm = table_permutation(params);
    Matrix p(params.q_field, params.n, params.n);
    for (unsigned i = 0; i < params.n; ++i) p.at(i, perm.one_line[i] - 1) = params.q_field->one();
    return p;
}

MultTable structured_table_primal(const Type1Field& tf) {
    const unsigned n = tf.params.n;
    const FieldPtr& q_field = tf.params.q_field;

    Matrix c(q_field, n, n);
    for (unsigned i = 0; i + 1 < n; ++i) c.at(i, i + 1) = q_field->one();
    for (unsigned j = 0; j < n; ++j) c.at(n - 1, j) = -q_field->one();

    const Matrix p = permutation_matrix(tf.params);
    const Matrix structured = p * c * p.transpose();

    const MultTable brute = multiplication_table(tf.alpha);
    check(structured == brute.entries(), "structured primal table mismatch");
    return MultTable(brute.basis(), structured);
}

MultTable structured_table_dual(const Type1Field& tf) {
    const unsigned n = tf.params.n;
    const FieldPtr& q_field = tf.params.q_field;
    const FieldElement one = q_field->one();

    Matrix d(q_field, n, n);
    d.at(0, 0) = -(one + one);
    for (unsigned i = 1; i < n; ++i) {
        d.at(i, i) = -one;
        d.at(i, 0) = -one;
    }
    for (unsigned i = 0; i + 1 < n; ++i) d.at(i, i + 1) = one;

    const Matrix p = permutation_matrix(tf.params);
    const FieldElement np1_inv = q_field->from_integer(tf.params.n_plus_1).inverse();
    const Matrix structured = (p * d * p.transpose()).scaled(np1_inv);

    const FieldElement gen = (tf.alpha - tf.field->one()) * n_plus_1_in(tf).inverse();
    const MultTable brute = multiplication_table(gen);
    check(structured == brute.entries(), "structured dual table mismatch");
    return MultTable(brute.basis(), structured);
}

DualComplexityReport verify_dual_complexity(const Type1Params& params) {
    const Type1Field tf = build_type1(params);

    const MultTable primal = multiplication_table(tf.alpha);
    const MultTable dual = multiplication_table(dual_generator(tf));

    DualComplexityReport report;
    report.c_primal = complexity(primal);
    report.c_dual = complexity(dual);
    report.expected_dual =
        params.q_field->characteristic() == 2 ? 3 * params.n - 3 : 3 * params.n - 2;
    report.structured_match = structured_table_primal(tf).entries() == primal.entries() &&
                              structured_table_dual(tf).entries() == dual.entries();
    report.pass = report.c_primal == 2 * params.n - 1 && report.c_dual == report.expected_dual &&
                  report.structured_match;
    return report;
}

} // namespace onb
