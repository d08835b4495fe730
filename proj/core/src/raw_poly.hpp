#ifndef ONB_RAW_POLY_HPP
#define ONB_RAW_POLY_HPP

// Internal polynomial routines on bare coefficient vectors (lowest power
// first, not necessarily trimmed).  Shared by the field tower arithmetic and
// the public Polynomial type.

#include <cstddef>
#include <utility>
#include <vector>

#include "onb/field.hpp"

namespace onb::detail {

// strips high zero coefficients in place
inline void trim(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

inline bool is_zero(const std::vector<FieldElement>& c) {
    for (const auto& e : c)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<FieldElement> mul(const FieldPtr& field, const std::vector<FieldElement>& a,
                              const std::vector<FieldElement>& b);

// f = q*g + r with deg r < deg g; g must be nonzero (trimmed view is taken)
std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
divrem(const FieldPtr& field, std::vector<FieldElement> f, std::vector<FieldElement> g);

// extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero)
struct Xgcd {
    std::vector<FieldElement> g, u, v;
};
Xgcd xgcd(const FieldPtr& field, std::vector<FieldElement> a, std::vector<FieldElement> b);

} // namespace onb::detail

#endif
