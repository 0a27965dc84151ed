#ifndef VERMA_ORACLE_HPP
#define VERMA_ORACLE_HPP

#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "verma/chevalley.hpp"
#include "verma/linalg.hpp"
#include "verma/probes.hpp"
#include "verma/singular.hpp"

namespace verma {

/// A generator of g: a root vector E_r or a Cartan element H_i.
struct Generator {
    enum Kind { Root, Cartan } kind = Root;
    int id = 0;

    static Generator root(int r) { return {Root, r}; }
    static Generator cartan(int i) { return {Cartan, i}; }
};

/// c · g_1 g_2 … g_k, acting on a vector by g_k first.
struct FreeLieWord {
    std::vector<Generator> gens;
    Rational coefficient = 1;
};

/// M_λ in the PBW basis E^a v_λ, with U(g) acting by straightening:
/// E_r E_{-β} = E_{-β} E_r + [E_r, E_{-β}], E_α v_λ = 0, H v_λ = λ(H) v_λ.
class PBWModule {
public:
    PBWModule(const RootSystem& rs, const StructureConstants& N, Ordering ord, Weight lambda)
        : rs_(&rs), N_(&N), ord_(std::move(ord)), lambda_(std::move(lambda)), layout_(VariableLayout::make(rs, ord_))
    {
        if (static_cast<int>(lambda_.coords.size()) != rs.rank()) throw std::invalid_argument("weight length differs from rank");
    }

    const RootSystem& roots() const { return *rs_; }
    const Ordering& ordering() const { return ord_; }
    const Weight& lambda() const { return lambda_; }
    const VariableLayout& layout() const { return *layout_; }

    /// Weight of E^a v_λ.
    Weight weight(const Exponents& a) const
    {
        Weight w = lambda_;
        for (int t = 0; t < static_cast<int>(a.size()); ++t)
            if (a[t])
                for (int i = 0; i < rs_->rank(); ++i)
                    for (int j = 0; j < rs_->rank(); ++j)
                        w.coords[j] -= a[t] * rs_->positive_coords(ord_.order[t])[i] * rs_->cartan()[i][j];
        return w;
    }

    /// E_r E^a v_λ.
    const Polynomial& act_root(int r, const Exponents& a) const
    {
        auto key = std::make_pair(r, a);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Polynomial out = compute(r, a);
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    Polynomial act(const Generator& g, const Polynomial& v) const
    {
        Polynomial out;
        for (const auto& [a, c] : v) {
            if (g.kind == Generator::Cartan) {
                add_to(out, a, c * weight(a).coords[g.id]);
            } else {
                for (const auto& [b, d] : act_root(g.id, a)) add_to(out, b, c * d);
            }
        }
        return out;
    }

    Polynomial act(const FreeLieWord& u, Polynomial v) const
    {
        for (auto it = u.gens.rbegin(); it != u.gens.rend(); ++it) v = act(*it, v);
        for (auto& [a, c] : v) c *= u.coefficient;
        if (u.coefficient == 0) v.clear();
        return v;
    }

    /// u · v_λ expanded in the PBW basis.
    PBWVector straighten(const FreeLieWord& u) const
    {
        Polynomial one;
        add_to(one, Exponents(ord_.size(), 0), Rational(1));
        return PBWVector{lambda_, act(u, one)};
    }

private:
    Polynomial compute(int r, const Exponents& a) const
    {
        const RootSystem& rs = *rs_;
        Polynomial out;
        int s = 0;
        while (s < static_cast<int>(a.size()) && a[s] == 0) ++s;
        if (s == static_cast<int>(a.size())) {
            if (!rs.is_positive(r)) {
                Exponents e(a.size(), 0);
                e[ord_.position[rs.negate(r)]] = 1;
                add_to(out, e, Rational(1));
            }
            return out;
        }
        if (!rs.is_positive(r) && ord_.position[rs.negate(r)] <= s) {
            Exponents e = a;
            ++e[ord_.position[rs.negate(r)]];
            add_to(out, e, Rational(1));
            return out;
        }
        // E_r F E^{a'} v = F (E_r E^{a'} v) + [E_r, F] E^{a'} v with F = E_{-β_s}.
        const int F = rs.negate(ord_.order[s]);
        Exponents rest = a;
        --rest[s];
        for (const auto& [b, c] : act_root(r, rest))
            for (const auto& [e, d] : act_root(F, b)) add_to(out, e, c * d);
        if (r == rs.negate(F)) {
            Rational h = coroot_pairing(rs, weight(rest), r);
            add_to(out, rest, h);
        } else if (auto t = rs.sum(r, F)) {
            Rational n((*N_)(r, F));
            for (const auto& [e, d] : act_root(*t, rest)) add_to(out, e, n * d);
        }
        return out;
    }

    const RootSystem* rs_;
    const StructureConstants* N_;
    Ordering ord_;
    Weight lambda_;
    std::shared_ptr<const VariableLayout> layout_;
    mutable std::map<std::pair<int, Exponents>, Polynomial> memo_;
};

/// Basis of the singular vectors of weight μ in M_λ: the common kernel of
/// the E_α, α simple, on the weight-μ space.
inline std::vector<PBWVector> singular_kernel(const PBWModule& M, const Weight& mu)
{
    const RootSystem& rs = M.roots();
    RationalVector diff = simple_coordinates(rs, M.lambda() - mu);
    RootCoords target(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
        if (!is_natural(diff[i])) return {};
        target[i] = static_cast<int>(to_long(diff[i]));
    }
    auto basis = exponents_of_weight(rs, M.layout(), target);
    std::map<std::pair<int, Exponents>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int a = 0; a < rs.rank(); ++a)
            for (const auto& [e, c] : M.act_root(a, basis[j])) {
                auto key = std::make_pair(a, e);
                auto it = rows.find(key);
                if (it == rows.end()) it = rows.emplace(key, rows.size()).first;
                cols[j].push_back({it->second, c});
            }
    RationalMatrix A(rows.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [r, c] : cols[j]) A(r, j) += c;
    std::vector<PBWVector> out;
    for (const auto& v : null_space(A)) {
        PBWVector p{M.lambda(), {}};
        for (std::size_t j = 0; j < basis.size(); ++j) p.add(basis[j], v[j]);
        out.push_back(p.normalize());
    }
    return out;
}

/// Operator of a generator in the differential-operator realization.
inline const DiffOp& generator_op(const LieOps& ops, const Generator& g)
{
    return g.kind == Generator::Cartan ? ops.cartan_op(g.id) : ops.root_op(g.id);
}

/// u(f) computed by the operators agrees with τ(u · τ^{-1}(f)) computed by straightening.
inline bool tau_apply_check(const FreeLieWord& u, const Polynomial& f, const LieOps& ops, const PBWModule& M)
{
    Polynomial lhs = f;
    for (auto it = u.gens.rbegin(); it != u.gens.rend(); ++it) lhs = act(generator_op(ops, *it), lhs);
    for (auto& [a, c] : lhs) c *= u.coefficient;
    if (u.coefficient == 0) lhs.clear();
    return lhs == M.act(u, f);
}

/// A random word of 1..max_len generators.
inline FreeLieWord random_word(const RootSystem& rs, std::mt19937_64& rng, int max_len = 3)
{
    std::uniform_int_distribution<int> len(1, max_len), pick(0, rs.num_roots() + rs.rank() - 1);
    FreeLieWord u;
    int k = len(rng);
    for (int i = 0; i < k; ++i) {
        int g = pick(rng);
        u.gens.push_back(g < rs.num_roots() ? Generator::root(g) : Generator::cartan(g - rs.num_roots()));
    }
    u.coefficient = random_rational(rng);
    if (u.coefficient == 0) u.coefficient = 1;
    return u;
}

/// A random polynomial with a few terms of bounded total degree.
inline Polynomial random_polynomial(int vars, std::mt19937_64& rng, int terms = 3, int max_degree = 3)
{
    std::uniform_int_distribution<int> var(0, vars - 1), deg(0, max_degree), coef(-5, 5);
    Polynomial p;
    for (int i = 0; i < terms; ++i) {
        Exponents e(vars, 0);
        int d = deg(rng);
        for (int j = 0; j < d; ++j) ++e[var(rng)];
        int c = coef(rng);
        add_to(p, e, Rational(c == 0 ? 1 : c));
    }
    return p;
}

}  // namespace verma

#endif  // VERMA_ORACLE_HPP
