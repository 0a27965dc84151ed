#ifndef VERMA_SINGULAR_HPP
#define VERMA_SINGULAR_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "verma/diffop.hpp"
#include "verma/lie_ops.hpp"
#include "verma/probes.hpp"
#include "verma/weyl_rep.hpp"

namespace verma {

/// Σ_a c_a E^a v_λ in the PBW basis of the ordering in use.
struct PBWVector {
    Weight lambda;
    std::map<Exponents, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }

    void add(const Exponents& a, const Rational& c) { add_to(coeffs, a, c); }

    /// Scales so the first nonzero coefficient in exponent order is 1.
    PBWVector& normalize()
    {
        if (coeffs.empty()) return *this;
        Rational s = 1 / coeffs.begin()->second;
        for (auto& [a, c] : coeffs) c *= s;
        return *this;
    }

    /// Whether o = s·(*this) for a single nonzero rational s.
    bool proportional_to(const PBWVector& o) const
    {
        if (coeffs.size() != o.coeffs.size()) return false;
        if (coeffs.empty()) return true;
        Rational s = o.coeffs.begin()->second / coeffs.begin()->second;
        for (const auto& [a, c] : coeffs) {
            auto it = o.coeffs.find(a);
            if (it == o.coeffs.end() || it->second != s * c) return false;
        }
        return true;
    }

    bool operator==(const PBWVector& o) const { return lambda == o.lambda && coeffs == o.coeffs; }
};

/// τ(E^a v_λ) = x^a.
inline Polynomial tau(const PBWVector& v) { return v.coeffs; }

inline PBWVector tau_inverse(const Polynomial& f, const Weight& lambda) { return PBWVector{lambda, f}; }

/// Σ_t a_t β_t in simple coordinates, for an exponent vector under `layout`.
inline RootCoords weight_offset(const RootSystem& rs, const VariableLayout& layout, const Exponents& a)
{
    RootCoords w(rs.rank(), 0);
    for (int t = 0; t < layout.size(); ++t) {
        if (!a[t]) continue;
        const auto& b = rs.positive_coords(layout.root[t]);
        for (int i = 0; i < rs.rank(); ++i) w[i] += a[t] * b[i];
    }
    return w;
}

/// Whether all monomials of v share one weight.
inline bool is_homogeneous(const PBWVector& v, const RootSystem& rs, const VariableLayout& layout)
{
    std::optional<RootCoords> w;
    for (const auto& [a, c] : v.coeffs) {
        RootCoords cur = weight_offset(rs, layout, a);
        if (w && *w != cur) return false;
        w = cur;
    }
    return true;
}

/// d_α(τ(v)) = 0 for every simple α, computed exactly.
inline bool verify_singular(const PBWVector& v, const LieOps& ops)
{
    if (!is_homogeneous(v, ops.roots(), *ops.layout())) throw std::invalid_argument("vector is not weight-homogeneous");
    if (!(v.lambda == ops.lambda())) throw std::invalid_argument("vector and operators use different highest weights");
    Polynomial f = tau(v);
    for (int a = 0; a < ops.roots().rank(); ++a)
        if (!act(ops.d(a), f).empty()) return false;
    return true;
}

struct SingularResult {
    WeylElement word;
    Weight mu;                          // w·λ
    Series series;                      // w(1) as computed
    std::optional<PBWVector> vector;    // set on the polynomial branch
    std::optional<LinkageChain> chain;  // strong linkage witness, if any
    bool verified = false;              // verify_singular on the polynomial branch

    bool polynomial() const { return vector.has_value(); }
    /// The polynomial branch is taken iff μ is strongly linked to λ.
    bool consistent() const { return polynomial() == chain.has_value(); }
};

/// Thrown when the truncation cannot decide polynomiality.
class Undecided : public DepthExhausted {
public:
    using DepthExhausted::DepthExhausted;
};

/// f = w(1) and, when f is a polynomial, the singular vector τ^{-1}(f).
///
/// If λ − w·λ lies in ℕΔ the depth is raised to its height, so every
/// polynomial term of that weight is stored. The polynomial branch is taken
/// when the stored terms are natural and their sum passes verify_singular.
inline SingularResult solve_singular(const LieOps& ops, const WeylElement& w, int depth)
{
    const RootSystem& rs = ops.roots();
    SingularResult res;
    res.word = w;
    res.mu = dot_action(rs, w, ops.lambda());
    res.chain = strongly_linked(rs, ops.lambda(), res.mu);
    RationalVector diff = simple_coordinates(rs, ops.lambda() - res.mu);
    bool natural = true;
    Rational height(0);
    for (const auto& c : diff) {
        natural = natural && is_natural(c);
        height += c;
    }
    if (natural) depth = std::max(depth, static_cast<int>(to_long(height)));
    WeylAction W(ops, depth);
    res.series = W.apply_word(w, W.one());
    if (!natural || !res.series.is_polynomial()) return res;
    if (!res.series.exact() && *res.series.depth() < height) throw Undecided("truncation too shallow to decide polynomiality");
    // Terms with negative simple exponents may lie beyond the stored
    // window; a polynomial truncation that is itself a solution equals f by
    // uniqueness of weighted solutions.
    PBWVector v = tau_inverse(res.series.to_polynomial(), ops.lambda());
    v.normalize();
    res.verified = verify_singular(v, ops);
    if (res.verified) res.vector = std::move(v);
    return res;
}

/// Reflection s_γ for a positive root γ, as u s_α u^{-1}.
inline SingularResult solve_singular_root(const LieOps& ops, int gamma, int depth)
{
    return solve_singular(ops, reflection_word(ops.roots(), gamma), depth);
}

/// Every μ ↑ λ within a height bound, with witness chains.
inline std::vector<LinkageChain> singular_weights(const RootSystem& rs, const Weight& lambda, int bound)
{
    return all_singular_weights(rs, lambda, bound);
}

}  // namespace verma

#endif  // VERMA_SINGULAR_HPP
