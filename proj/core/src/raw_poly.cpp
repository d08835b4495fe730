#include "raw_poly.hpp"

#include <stdexcept>

namespace onb::detail {

std::vector<FieldElement> mul(const FieldPtr& field, const std::vector<FieldElement>& a,
                              const std::vector<FieldElement>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<FieldElement> out(a.size() + b.size() - 1, field->zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
divrem(const FieldPtr& field, std::vector<FieldElement> f, std::vector<FieldElement> g) {
    trim(f);
    trim(g);
    if (g.empty()) throw std::invalid_argument("polynomial division by zero");
    if (f.size() < g.size()) return {{}, std::move(f)};

    const std::size_t dg = g.size() - 1;
    const FieldElement lead_inv = g.back().inverse();
    std::vector<FieldElement> q(f.size() - dg, field->zero());
    for (std::size_t k = f.size(); k-- > dg;) {
        // k is the current top index of f; may already be cancelled
        if (f[k].is_zero()) continue;
        const FieldElement c = f[k] * lead_inv;
        q[k - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j)
            f[k - dg + j] = f[k - dg + j] - c * g[j];
    }
    f.resize(dg);
    trim(f);
    trim(q);
    return {std::move(q), std::move(f)};
}

Xgcd xgcd(const FieldPtr& field, std::vector<FieldElement> a, std::vector<FieldElement> b) {
    trim(a);
    trim(b);
    // invariant: u0*a0 + v0*b0 = r0, u1*a0 + v1*b0 = r1
    std::vector<FieldElement> r0 = std::move(a), r1 = std::move(b);
    std::vector<FieldElement> u0{field->one()}, v0{}, u1{}, v1{field->one()};
    while (!r1.empty()) {
        auto [q, r] = divrem(field, r0, r1);
        auto step = [&](std::vector<FieldElement>& x0, std::vector<FieldElement>& x1) {
            auto t = mul(field, q, x1);
            // x0 - q*x1
            std::vector<FieldElement> nx(std::max(x0.size(), t.size()), field->zero());
            for (std::size_t i = 0; i < x0.size(); ++i) nx[i] = x0[i];
            for (std::size_t i = 0; i < t.size(); ++i) nx[i] = nx[i] - t[i];
            trim(nx);
            x0 = std::move(x1);
            x1 = std::move(nx);
        };
        step(u0, u1);
        step(v0, v1);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    if (!r0.empty() && !r0.back().is_one()) {
        const FieldElement s = r0.back().inverse();
        for (auto& c : r0) c = c * s;
        for (auto& c : u0) c = c * s;
        for (auto& c : v0) c = c * s;
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

} // namespace onb::detail
