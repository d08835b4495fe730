#include "onb/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace onb {

namespace {

using json = nlohmann::ordered_json;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::pair<int, int> position_of(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error(e.what(), line, col);
    }
}

[[noreturn]] void schema_error(const std::string& what) { throw parse_error(what, 0, 0); }

json element_json(const FieldElement& a) {
    if (a.field()->is_prime_field()) return a.residue();
    json arr = json::array();
    for (const auto& c : a.coords()) arr.push_back(element_json(c));
    return arr;
}

FieldElement element_from(const json& j, const FieldPtr& field) {
    if (field->is_prime_field()) {
        if (!j.is_number_unsigned()) schema_error("prime-field element must be an unsigned integer");
        const std::uint64_t v = j.get<std::uint64_t>();
        if (v >= field->characteristic()) schema_error("prime-field element out of range");
        return field->from_integer(v);
    }
    if (!j.is_array()) schema_error("extension element must be an array of coordinates");
    if (j.size() != field->degree()) schema_error("coordinate count must equal the extension degree");
    std::vector<FieldElement> coords;
    coords.reserve(j.size());
    for (const auto& c : j) coords.push_back(element_from(c, field->base()));
    return field->element(std::move(coords));
}

json polynomial_json(const Polynomial& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(element_json(c));
    return arr;
}

Polynomial polynomial_from(const json& j, const FieldPtr& field) {
    if (!j.is_array()) schema_error("polynomial must be an array of coefficients");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(element_from(c, field));
    return Polynomial(field, std::move(coeffs));
}

json q_json(const QSpec& q) { return json{{"p", q.p}, {"m", q.m}}; }

QSpec q_from(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("m")) schema_error("q must be {p, m}");
    QSpec q;
    q.p = j.at("p").get<std::uint64_t>();
    q.m = j.at("m").get<unsigned>();
    return q;
}

const json& field_at(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        schema_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

QSpec parse_q_spec(const std::string& text) {
    const auto caret = text.find('^');
    auto parse_u64 = [](const std::string& s) -> std::uint64_t {
        require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
                "malformed q spec");
        return std::stoull(s);
    };
    if (caret != std::string::npos) {
        QSpec q;
        q.p = parse_u64(text.substr(0, caret));
        const std::uint64_t m = parse_u64(text.substr(caret + 1));
        require(m >= 1 && m <= 64, "malformed q spec");
        q.m = static_cast<unsigned>(m);
        return q;
    }
    // a plain integer must be a prime power p^m
    std::uint64_t v = parse_u64(text);
    require(v >= 2, "q must be at least 2");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return QSpec{v, 1};
    QSpec q{p, 0};
    while (v > 1) {
        require(v % p == 0, "q is not a prime power");
        v /= p;
        ++q.m;
    }
    return q;
}

FieldPtr make_q_field(const QSpec& q) { return Field::prime_power(q.p, q.m); }

QSpec q_spec_of(const FieldPtr& q_field) {
    require(q_field != nullptr, "null field handle");
    return QSpec{q_field->characteristic(), q_field->degree_over_prime()};
}

std::string element_to_json(const FieldElement& a) { return element_json(a).dump(); }

std::string polynomial_to_json(const Polynomial& f) { return polynomial_json(f).dump(); }

FieldElement element_from_json(const std::string& text, const FieldPtr& field) {
    return element_from(parse_document(text), field);
}

Polynomial polynomial_from_json(const std::string& text, const FieldPtr& field) {
    return polynomial_from(parse_document(text), field);
}

std::string table_to_json(const TableDocument& doc) {
    json rows = json::array();
    for (std::size_t r = 0; r < doc.entries.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < doc.entries.cols(); ++c)
            row.push_back(element_json(doc.entries.at(r, c)));
        rows.push_back(std::move(row));
    }
    json j{{"q", q_json(doc.q)},
           {"n", doc.n},
           {"which", doc.which == TableKind::primal ? "primal" : "dual"},
           {"table", std::move(rows)},
           {"complexity", doc.complexity},
           {"structured_match", doc.structured_match}};
    return j.dump();
}

TableDocument table_from_json(const std::string& text) {
    const json j = parse_document(text);
    const QSpec q = q_from(field_at(j, "q"));
    const unsigned n = field_at(j, "n").get<unsigned>();
    const std::string which = field_at(j, "which").get<std::string>();
    if (which != "primal" && which != "dual") schema_error("which must be primal or dual");

    const FieldPtr q_field = make_q_field(q);
    const json& rows = field_at(j, "table");
    if (!rows.is_array() || rows.size() != n) schema_error("table must have n rows");
    Matrix entries(q_field, n, n);
    for (unsigned r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) schema_error("table rows must have n entries");
        for (unsigned c = 0; c < n; ++c) entries.at(r, c) = element_from(rows[r][c], q_field);
    }
    TableDocument doc{q,
                      n,
                      which == "primal" ? TableKind::primal : TableKind::dual,
                      std::move(entries),
                      field_at(j, "complexity").get<std::size_t>(),
                      field_at(j, "structured_match").get<bool>()};
    return doc;
}

std::string dual_to_json(const DualDocument& doc) {
    json basis = json::array();
    for (const auto& e : doc.dual_basis) basis.push_back(element_json(e));
    json j{{"q", q_json(doc.q)},
           {"n", doc.n},
           {"dual_basis", std::move(basis)},
           {"generator", element_json(doc.generator)},
           {"min_poly", polynomial_json(doc.min_poly)}};
    return j.dump();
}

DualDocument dual_from_json(const std::string& text) {
    const json j = parse_document(text);
    const QSpec q = q_from(field_at(j, "q"));
    const unsigned n = field_at(j, "n").get<unsigned>();
    const FieldPtr q_field = make_q_field(q);
    // elements live in F_q[x]/(1 + x + ... + x^n)
    const FieldPtr big = Field::extension(q_field, std::vector<FieldElement>(n + 1, q_field->one()));

    DualDocument doc;
    doc.q = q;
    doc.n = n;
    const json& basis = field_at(j, "dual_basis");
    if (!basis.is_array() || basis.size() != n) schema_error("dual_basis must have n elements");
    for (const auto& e : basis) doc.dual_basis.push_back(element_from(e, big));
    doc.generator = element_from(field_at(j, "generator"), big);
    doc.min_poly = polynomial_from(field_at(j, "min_poly"), q_field);
    return doc;
}

std::string report_to_json(const RunReport& report) {
    json j{{"q", q_json(report.q)},
           {"n", report.n},
           {"c_primal", report.c_primal},
           {"c_dual", report.c_dual},
           {"expected_dual", report.expected_dual},
           {"structured_match", report.structured_match},
           {"pass", report.pass}};
    if (report.elapsed_ms) j["elapsed_ms"] = *report.elapsed_ms;
    return j.dump();
}

RunReport report_from_json(const std::string& text) {
    const json j = parse_document(text);
    RunReport r;
    r.q = q_from(field_at(j, "q"));
    r.n = field_at(j, "n").get<unsigned>();
    r.c_primal = field_at(j, "c_primal").get<std::size_t>();
    r.c_dual = field_at(j, "c_dual").get<std::size_t>();
    r.expected_dual = field_at(j, "expected_dual").get<std::size_t>();
    r.structured_match = field_at(j, "structured_match").get<bool>();
    r.pass = field_at(j, "pass").get<bool>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    return r;
}

std::string table_to_csv(const TableDocument& doc) {
    std::ostringstream os;
    for (std::size_t r = 0; r < doc.entries.rows(); ++r) {
        for (std::size_t c = 0; c < doc.entries.cols(); ++c) {
            if (c) os << ",";
            os << element_code(doc.entries.at(r, c));
        }
        os << "\n";
    }
    return os.str();
}

std::string table_to_pretty(const TableDocument& doc) {
    std::ostringstream os;
    os << "q = " << doc.q.p;
    if (doc.q.m > 1) os << "^" << doc.q.m;
    os << ", n = " << doc.n << ", "
       << (doc.which == TableKind::primal ? "primal" : "dual") << " table\n";
    os << "complexity = " << doc.complexity
       << ", structured form matches = " << (doc.structured_match ? "yes" : "no") << "\n";
    for (std::size_t r = 0; r < doc.entries.rows(); ++r) {
        for (std::size_t c = 0; c < doc.entries.cols(); ++c)
            os << (c ? " " : "") << element_code(doc.entries.at(r, c));
        os << "\n";
    }
    return os.str();
}

std::string dual_to_pretty(const DualDocument& doc) {
    std::ostringstream os;
    os << "q = " << doc.q.p;
    if (doc.q.m > 1) os << "^" << doc.q.m;
    os << ", n = " << doc.n << "\n";
    os << "dual generator = " << doc.generator.str() << "\n";
    os << "dual basis (aligned to the Frobenius order of the primal basis):\n";
    for (const auto& e : doc.dual_basis) os << "  " << e.str() << "\n";
    os << "minimal polynomial of the generator = " << doc.min_poly.str() << "\n";
    return os.str();
}

std::string report_to_pretty(const RunReport& report) {
    std::ostringstream os;
    os << "q = " << report.q.p;
    if (report.q.m > 1) os << "^" << report.q.m;
    os << ", n = " << report.n << ": primal complexity " << report.c_primal << ", dual "
       << report.c_dual << " (expected " << report.expected_dual << "), structured "
       << (report.structured_match ? "match" : "MISMATCH") << " -> "
       << (report.pass ? "pass" : "FAIL");
    if (report.elapsed_ms) os << "  [" << *report.elapsed_ms << " ms]";
    os << "\n";
    return os.str();
}

} // namespace onb
