#ifndef VERMA_LIE_OPS_HPP
#define VERMA_LIE_OPS_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "verma/chevalley.hpp"
#include "verma/diffop.hpp"
#include "verma/root_system.hpp"
#include "verma/series.hpp"

namespace verma {

/// η_β = E_{-β}|_A for every positive β, under a fixed ordering.
///
/// Variables are ordering positions: x_t multiplies by E_{-β_t} in slot t.
/// η(β, c) inserts E_{-β} after the first c factors of E^a; moving it past
/// E_{-β_c}^{a_c} gives
///   η(β,c) = η(β,c-1) + Σ_j K_j/j! η(β + jβ_c, c-1) ∂_c^j,
///   K_j = Π_{s<j} N_{-β_c, -(β + sβ_c)}.
class EtaTable {
public:
    EtaTable(const RootSystem& rs, const StructureConstants& N, Ordering ord);

    const RootSystem& roots() const { return *rs_; }
    const Ordering& ordering() const { return ord_; }
    const std::shared_ptr<const VariableLayout>& layout() const { return layout_; }
    int vars() const { return ord_.size(); }

    /// η_β for a positive root id.
    const DiffOp& eta(int beta) const { return cut_[beta][0]; }
    /// η(β, c) for c = 0..m.
    const DiffOp& eta(int beta, int c) const { return cut_[beta][c]; }

private:
    const RootSystem* rs_;
    Ordering ord_;
    std::shared_ptr<const VariableLayout> layout_;
    std::vector<std::vector<DiffOp>> cut_;
};

inline EtaTable::EtaTable(const RootSystem& rs, const StructureConstants& N, Ordering ord)
    : rs_(&rs), ord_(std::move(ord)), layout_(VariableLayout::make(rs, ord_)), cut_(rs.num_positive())
{
    const int m = rs.num_positive();
    // Σ_j K_j/j! η(β + jβ_c, c-1) ∂_c^j for j ≥ 1.
    auto correction = [&](int beta, int c) {
        DiffOp out(m);
        int bc = ord_.order[c - 1];
        Rational k(1);
        int cur = beta;
        for (int j = 1;; ++j) {
            auto next = rs.sum(cur, bc);
            if (!next) break;
            k *= N(rs.negate(bc), rs.negate(cur));
            cur = *next;
            out += compose(cut_[cur][c - 1], DiffOp::partial(m, c - 1, j)) * (k / Rational(factorial(j)));
        }
        return out;
    };
    for (int beta = m - 1; beta >= 0; --beta) {
        auto& row = cut_[beta];
        row.assign(m + 1, DiffOp(m));
        int p1 = ord_.position[beta] + 1;
        row[p1] = DiffOp::x(m, p1 - 1);
        row[p1 - 1] = row[p1];
        for (int c = p1 + 1; c <= m; ++c) row[c] = row[c - 1] + correction(beta, c);
        for (int c = p1 - 1; c >= 1; --c) row[c - 1] = row[c] - correction(beta, c);
    }
}

/// The operators ζ_α, η_β, d_β realizing the action of g on A ≅ M_λ.
class LieOps {
public:
    LieOps(const RootSystem& rs, const StructureConstants& N, Ordering ord, Weight lambda);
    LieOps(std::shared_ptr<const EtaTable> etas, const StructureConstants& N, Weight lambda);

    const RootSystem& roots() const { return *rs_; }
    const StructureConstants& constants() const { return *N_; }
    const Ordering& ordering() const { return etas_->ordering(); }
    const Weight& lambda() const { return lambda_; }
    const std::shared_ptr<const VariableLayout>& layout() const { return etas_->layout(); }
    const EtaTable& eta_table() const { return *etas_; }
    int vars() const { return etas_->vars(); }

    const DiffOp& eta(int beta) const { return etas_->eta(beta); }
    const DiffOp& d(int beta) const { return d_[beta]; }
    const DiffOp& zeta(int i) const { return zeta_[i]; }
    /// Operator of E_r for any root id r (E_{-β} ↦ η_β, E_β ↦ d_β).
    const DiffOp& root_op(int r) const { return rs_->is_positive(r) ? d_[r] : eta(rs_->negate(r)); }
    /// Operator of H_i.
    const DiffOp& cartan_op(int i) const { return zeta_[i]; }

    /// Position of positive root β in the ordering.
    int pos(int beta) const { return ordering().position[beta]; }

private:
    void build();

    const RootSystem* rs_;
    const StructureConstants* N_;
    std::shared_ptr<const EtaTable> etas_;
    Weight lambda_;
    std::vector<DiffOp> d_;
    std::vector<DiffOp> zeta_;
};

inline LieOps::LieOps(const RootSystem& rs, const StructureConstants& N, Ordering ord, Weight lambda)
    : rs_(&rs), N_(&N), etas_(std::make_shared<EtaTable>(rs, N, std::move(ord))), lambda_(std::move(lambda))
{
    build();
}

inline LieOps::LieOps(std::shared_ptr<const EtaTable> etas, const StructureConstants& N, Weight lambda)
    : rs_(&etas->roots()), N_(&N), etas_(std::move(etas)), lambda_(std::move(lambda))
{
    build();
}

inline void LieOps::build()
{
    const RootSystem& rs = *rs_;
    const StructureConstants& N = *N_;
    const Ordering& ord = ordering();
    const int m = rs.num_positive(), n = rs.rank();
    if (static_cast<int>(lambda_.coords.size()) != n)
        throw std::invalid_argument("weight has " + std::to_string(lambda_.coords.size()) + " labels, rank is " + std::to_string(n));

    zeta_.assign(n, DiffOp(m));
    for (int i = 0; i < n; ++i) {
        DiffOp z = DiffOp::constant(m, lambda_.coords[i]);
        for (int t = 0; t < m; ++t) {
            int p = rs.pairing(ord.order[t], i);
            if (p) z -= compose(DiffOp::x(m, t), DiffOp::partial(m, t)) * Rational(p);
        }
        zeta_[i] = z;
    }

    d_.assign(m, DiffOp(m));
    for (int beta = 0; beta < n; ++beta) {
        DiffOp cur(m);  // d(β, m) = 0
        for (int c = m; c >= 1; --c) {
            int bc = ord.order[c - 1];
            if (bc == beta) {
                DiffOp inner = DiffOp::constant(m, coroot_pairing(rs, lambda_, beta));
                for (int s = c + 1; s <= m; ++s) {
                    int p = rs.pairing(ord.order[s - 1], beta);
                    if (p) inner -= compose(DiffOp::x(m, s - 1), DiffOp::partial(m, s - 1)) * Rational(p);
                }
                inner -= compose(DiffOp::x(m, c - 1), DiffOp::partial(m, c - 1));
                cur += compose(inner, DiffOp::partial(m, c - 1));
            } else {
                // (ad E_{-β_c})^j E_β = K̃_j E_{β - jβ_c}, each E_{β-jβ_c} a negative root vector.
                Rational k(1);
                int r = beta;
                for (int j = 1;; ++j) {
                    auto next = rs.difference(r, bc);
                    if (!next) break;
                    k *= N(rs.negate(bc), r);
                    r = *next;
                    if (rs.is_positive(r)) throw InternalError("unexpected positive root in d recursion");
                    cur -= compose(etas_->eta(rs.negate(r), c - 1), DiffOp::partial(m, c - 1, j)) *
                           (k / Rational(factorial(j)));
                }
            }
        }
        d_[beta] = cur;
    }
    // [d_{β'}, d_α] = N_{β',α} d_{β'+α}; ids increase with height.
    for (int beta = n; beta < m; ++beta) {
        for (int a = 0; a < n; ++a) {
            auto prev = rs.difference(beta, a);
            if (!prev || !rs.is_positive(*prev)) continue;
            int nn = N(*prev, a);
            d_[beta] = commutator(d_[*prev], d_[a]) * (Rational(1) / nn);
            break;
        }
        if (d_[beta].is_zero()) throw InternalError("no decomposition for a positive root");
    }
}

/// [x_α, η_α] = 0 for every simple α.
inline bool verify_good_ordering(const EtaTable& etas)
{
    const int m = etas.vars();
    for (int a = 0; a < etas.roots().rank(); ++a) {
        int t = etas.ordering().position[a];
        if (!commutator(DiffOp::x(m, t), etas.eta(a)).is_zero()) return false;
    }
    return true;
}

/// D_β = Σ_{γ: γ-β ∈ Φ⁺} N_{β,-γ} x_{γ-β} ∂_γ.
inline DiffOp leading_d(const LieOps& ops, int beta)
{
    const RootSystem& rs = ops.roots();
    const int m = ops.vars();
    DiffOp out(m);
    for (int g = 0; g < rs.num_positive(); ++g) {
        auto diff = rs.difference(g, beta);
        if (!diff || !rs.is_positive(*diff)) continue;
        out += compose(DiffOp::x(m, ops.pos(*diff)), DiffOp::partial(m, ops.pos(g))) *
               Rational(ops.constants()(beta, rs.negate(g)));
    }
    return out;
}

/// η_β − x_β has every term with a vanishing on Δ and |a| ≤ |b|.
inline bool eta_shape_ok(const EtaTable& etas, int beta)
{
    const int m = etas.vars();
    DiffOp rest = etas.eta(beta) - DiffOp::x(m, etas.ordering().position[beta]);
    for (const auto& [t, c] : rest.terms()) {
        for (int i = 0; i < m; ++i)
            if (t.a[i] && etas.layout()->simple[i]) return false;
        if (t.degree() > 0) return false;
    }
    return true;
}

/// d_β − D_β has every term with |a| < |b|.
inline bool d_shape_ok(const LieOps& ops, int beta)
{
    DiffOp rest = ops.d(beta) - leading_d(ops, beta);
    for (const auto& [t, c] : rest.terms())
        if (t.degree() >= 0) return false;
    return true;
}

}  // namespace verma

#endif  // VERMA_LIE_OPS_HPP
