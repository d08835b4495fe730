#ifndef ONB_SERIALIZE_HPP
#define ONB_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "onb/basis.hpp"
#include "onb/field.hpp"
#include "onb/matrix.hpp"
#include "onb/polynomial.hpp"
#include "onb/type1.hpp"

namespace onb {

/// Prime-power field size q = p^m.
struct QSpec {
    std::uint64_t p = 0;
    unsigned m = 1;

    friend bool operator==(const QSpec& a, const QSpec& b) { return a.p == b.p && a.m == b.m; }
};

/// Accepts "p" (any prime power written out, e.g. "8") or "p^m".
/// Throws std::invalid_argument on anything else.
QSpec parse_q_spec(const std::string& text);

/// F_q for the given spec (tower over the prime field with the default
/// modulus at each level).
FieldPtr make_q_field(const QSpec& q);

QSpec q_spec_of(const FieldPtr& q_field);

enum class TableKind { primal, dual };

/// Raised on malformed or out-of-schema input.  line/column are 1-based;
/// 0 means the position is unknown.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

/// One row of a verification sweep.
struct RunReport {
    QSpec q;
    unsigned n = 0;
    std::size_t c_primal = 0;
    std::size_t c_dual = 0;
    std::size_t expected_dual = 0;
    bool structured_match = false;
    bool pass = false;
    std::optional<std::uint64_t> elapsed_ms; // absent in --stable output

    friend bool operator==(const RunReport& a, const RunReport& b) {
        return a.q == b.q && a.n == b.n && a.c_primal == b.c_primal && a.c_dual == b.c_dual &&
               a.expected_dual == b.expected_dual && a.structured_match == b.structured_match &&
               a.pass == b.pass && a.elapsed_ms == b.elapsed_ms;
    }
};

/// Multiplication-table payload as emitted by the CLI.
struct TableDocument {
    QSpec q;
    unsigned n = 0;
    TableKind which = TableKind::primal;
    Matrix entries;        // n x n over F_q
    std::size_t complexity = 0;
    bool structured_match = false;

    friend bool operator==(const TableDocument& a, const TableDocument& b) {
        return a.q == b.q && a.n == b.n && a.which == b.which && a.entries == b.entries &&
               a.complexity == b.complexity && a.structured_match == b.structured_match;
    }
};

/// Dual-basis payload as emitted by the CLI: the basis elements and the
/// generator in power-basis coordinates, and the generator's minimal
/// polynomial over F_q (all coefficient lists lowest power first).
struct DualDocument {
    QSpec q;
    unsigned n = 0;
    std::vector<FieldElement> dual_basis;
    FieldElement generator;
    Polynomial min_poly;

    friend bool operator==(const DualDocument& a, const DualDocument& b) {
        return a.q == b.q && a.n == b.n && a.dual_basis == b.dual_basis &&
               a.generator == b.generator && a.min_poly == b.min_poly;
    }
};

// Serialization: prime-field elements render as integers in [0, p),
// extension elements as arrays of base-field serializations, lowest power
// first.  JSON output is compact with a fixed key order, so equal values
// serialize to identical bytes.

std::string element_to_json(const FieldElement& a);
std::string polynomial_to_json(const Polynomial& f);
std::string table_to_json(const TableDocument& doc);
std::string dual_to_json(const DualDocument& doc);
std::string report_to_json(const RunReport& report);

FieldElement element_from_json(const std::string& text, const FieldPtr& field);
Polynomial polynomial_from_json(const std::string& text, const FieldPtr& field);
TableDocument table_from_json(const std::string& text);
DualDocument dual_from_json(const std::string& text);
RunReport report_from_json(const std::string& text);

/// Matrix rows as comma-separated integer element codes, one line per row.
std::string table_to_csv(const TableDocument& doc);

std::string table_to_pretty(const TableDocument& doc);
std::string dual_to_pretty(const DualDocument& doc);
std::string report_to_pretty(const RunReport& report);

} // namespace onb

#endif
