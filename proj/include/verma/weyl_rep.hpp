#ifndef VERMA_WEYL_REP_HPP
#define VERMA_WEYL_REP_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "verma/lie_ops.hpp"
#include "verma/series.hpp"

namespace verma {

/// The action of W on truncated power series: s_α(f) = η_α^{⟨μ+ρ,α^∨⟩}(f)
/// on each weighted component f_μ.
class WeylAction {
public:
    /// `depth` is the truncation used whenever an exact input would
    /// produce an infinite series.
    WeylAction(const LieOps& ops, int depth) : ops_(&ops), depth_(depth)
    {
        if (!verify_good_ordering(ops.eta_table())) throw std::invalid_argument("ordering is not good");
        const int m = ops.vars();
        for (int a = 0; a < ops.roots().rank(); ++a) rest_.push_back(ops.eta(a) - DiffOp::x(m, ops.pos(a)));
    }

    const LieOps& ops() const { return *ops_; }
    const RootSystem& roots() const { return ops_->roots(); }
    int depth() const { return depth_; }

    Series one() const { return Series::one(ops_->layout()); }

    /// η_α^c(f) = Σ_p ⟨c⟩_p/p! x_α^{c−p} (η_α − x_α)^p(f).
    Series eta_power(int alpha, const Rational& c, const Series& f) const
    {
        const int t = ops_->pos(alpha);
        const int budget = f.depth() ? *f.depth() : depth_;
        bool cut = false;
        Series out(ops_->layout(), f.depth());
        Series cur = f;
        Rational coef(1);
        for (int p = 0; !cur.is_zero(); ++p) {
            out += cur.times_power(t, c - p) * coef;
            coef *= (c - p) / Rational(p + 1);
            if (coef == 0) break;
            Series next = act(rest_[alpha], cur);
            Series kept = next.truncated(budget);
            if (kept.size() != next.size()) cut = true;
            cur = std::move(kept);
        }
        out.set_depth(f.exact() && !cut ? std::nullopt : std::optional<int>(budget));
        return out;
    }

    /// ⟨μ+ρ, α^∨⟩ on the component whose terms have exponent vector e.
    Rational shifted_pairing(const RationalVector& e, int alpha) const
    {
        const RootSystem& rs = roots();
        Rational k = coroot_pairing(rs, ops_->lambda(), alpha) + 1;
        const auto& layout = *ops_->layout();
        for (int t = 0; t < layout.size(); ++t)
            if (e[t] != 0) k -= e[t] * rs.pairing(layout.root[t], alpha);
        return k;
    }

    /// Splits f into weighted components keyed by Σ_t e_t β_t in simple coordinates.
    std::vector<Series> components(const Series& f) const
    {
        const RootSystem& rs = roots();
        const auto& layout = *ops_->layout();
        std::map<RationalVector, Series> parts;
        for (const auto& [k, c] : f.terms()) {
            RationalVector w(rs.rank(), Rational(0));
            for (int t = 0; t < layout.size(); ++t) {
                Rational e = f.exponent(k, t);
                if (e == 0) continue;
                const auto& b = rs.positive_coords(layout.root[t]);
                for (int i = 0; i < rs.rank(); ++i) w[i] += e * b[i];
            }
            auto it = parts.find(w);
            if (it == parts.end()) it = parts.emplace(w, Series::monomial(f.layout(), f.base(), Rational(0))).first;
            it->second.add(k, c);
        }
        std::vector<Series> out;
        for (auto& [w, s] : parts) {
            s.set_depth(f.depth());
            out.push_back(std::move(s));
        }
        return out;
    }

    Series simple_reflect(int alpha, const Series& f) const
    {
        Series out(ops_->layout(), f.depth());
        bool first = true;
        for (const Series& part : components(f)) {
            Rational c = shifted_pairing(part.exponents(part.terms().begin()->first), alpha);
            Series r = eta_power(alpha, c, part);
            if (first) {
                out = std::move(r);
                first = false;
            } else {
                out += r;
            }
        }
        return out;
    }

    /// w(f), the rightmost letter of the word acting first.
    Series apply_word(const WeylElement& w, const Series& f) const
    {
        Series cur = f;
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) cur = simple_reflect(*it, cur);
        return cur;
    }

    /// Both sides of the braid identity for the simple pair (α, β) on a probe.
    std::pair<Series, Series> braid_sides(int alpha, int beta, const Rational& c1, const Rational& c2, const Series& probe) const
    {
        const RootSystem& rs = roots();
        if (alpha == beta) throw std::invalid_argument("braid relation needs distinct simple roots");
        if (rs.norm2(alpha) > rs.norm2(beta)) throw std::invalid_argument("first root must be the shorter one");
        int prod = rs.pairing(alpha, beta) * rs.pairing(beta, alpha);
        // Exponent lists, rightmost operator first.
        using Step = std::pair<int, Rational>;
        std::vector<Step> lhs, rhs;
        const int a = alpha, b = beta;
        switch (prod) {
        case 0:
            lhs = {{a, c1}, {b, c2}};
            rhs = {{b, c2}, {a, c1}};
            break;
        case 1:
            lhs = {{a, c1}, {b, c1 + c2}, {a, c2}};
            rhs = {{b, c2}, {a, c1 + c2}, {b, c1}};
            break;
        case 2:
            lhs = {{a, c1}, {b, c1 + c2}, {a, c1 + 2 * c2}, {b, c2}};
            rhs = {{b, c2}, {a, c1 + 2 * c2}, {b, c1 + c2}, {a, c1}};
            break;
        case 3:
            lhs = {{a, c1}, {b, c1 + c2}, {a, 2 * c1 + 3 * c2}, {b, c1 + 2 * c2}, {a, c1 + 3 * c2}, {b, c2}};
            rhs = {{b, c2}, {a, c1 + 3 * c2}, {b, c1 + 2 * c2}, {a, 2 * c1 + 3 * c2}, {b, c1 + c2}, {a, c1}};
            break;
        default:
            throw std::invalid_argument("not a pair of simple roots");
        }
        auto run = [&](const std::vector<Step>& steps) {
            Series cur = probe;
            for (const auto& [r, c] : steps) cur = eta_power(r, c, cur);
            return cur;
        };
        return {run(lhs), run(rhs)};
    }

    bool verify_braid(int alpha, int beta, const Rational& c1, const Rational& c2, const Series& probe) const
    {
        auto [l, r] = braid_sides(alpha, beta, c1, c2, probe);
        return l.agrees_with(r);
    }

private:
    const LieOps* ops_;
    int depth_;
    std::vector<DiffOp> rest_;
};

}  // namespace verma

#endif  // VERMA_WEYL_REP_HPP
