#ifndef VERMA_SP_FORMULA_HPP
#define VERMA_SP_FORMULA_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "verma/chevalley.hpp"
#include "verma/linalg.hpp"
#include "verma/singular.hpp"

namespace verma {

namespace detail {

inline RationalMatrix mat_bracket(const RationalMatrix& a, const RationalMatrix& b)
{
    const std::size_t n = a.rows();
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k) != 0)
                for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
            if (b(i, k) != 0)
                for (std::size_t j = 0; j < n; ++j) out(i, j) -= b(i, k) * a(k, j);
        }
    return out;
}

inline RationalMatrix mat_scale(RationalMatrix a, const Rational& s)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
    return a;
}

}  // namespace detail

/// sp(2n) in the matrices C_{i,j} of the PBW basis
///   C_{i,j} = E_{i,j} − E_{n+j,n+i}, C_{n+i,j} = E_{n+i,j} + E_{n+j,i}, C_{n+k,k} = E_{n+k,k},
/// and the Chevalley basis of the StructureConstants table realized in the
/// same matrices. Indices in the C-labels are 1-based.
class SpContext {
public:
    explicit SpContext(int n);

    int n() const { return n_; }
    const RootSystem& roots() const { return rs_; }
    const StructureConstants& constants() const { return N_; }
    const Ordering& ordering() const { return ord_; }

    /// C_{p,q} as a 2n×2n matrix, p ≠ q.
    RationalMatrix C(int p, int q) const;
    /// Position in the ordering of the variable x_{p,q}, using x_{n+i,j} = x_{n+j,i}.
    int var(int p, int q) const;
    /// "C_{p,q}" for the variable at position t.
    std::string var_label(int t) const
    {
        for (const auto& [pq, pos] : var_)
            if (pos == t) return "C_{" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "}";
        throw std::out_of_range("no variable at this position");
    }
    /// Matrix of the Chevalley root vector E_r.
    const RationalMatrix& root_matrix(int r) const { return E_[r]; }
    /// C_{(β)} = c_β E_{-β} for the basis element C of negative root −β.
    const Rational& twist(int beta) const { return twist_[beta]; }
    /// Whether the realized matrices reproduce every N_{r,s}.
    bool realization_consistent() const;

    /// λ_i = λ(H_i) + 1.
    Rational shifted(const Weight& lambda, int i) const { return lambda.coords[i - 1] + 1; }
    /// k = ⟨λ+ρ, (e_1+e_n)^∨⟩.
    Rational k_of(const Weight& lambda) const;
    int top_root() const { return top_; }

private:
    RationalMatrix formula_matrix(int beta) const;

    int n_;
    RootSystem rs_;
    StructureConstants N_;
    Ordering ord_;
    std::vector<RationalMatrix> E_;
    std::vector<Rational> twist_;
    std::map<std::pair<int, int>, int> var_;
    int top_ = -1;
};

inline SpContext::SpContext(int n) : n_(n), rs_('C', n), N_(rs_), ord_(sp_ordering(rs_))
{
    const int m = rs_.num_positive(), d = 2 * n;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            RationalVector v(n, Rational(0));
            v[j - 1] = 1;
            v[i - 1] = -1;
            var_[{i, j}] = ord_.position[*rs_.find_ambient(v)];
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            RationalVector v(n, Rational(0));
            v[j - 1] += 1;
            v[i - 1] += 1;
            var_[{n + i, j}] = ord_.position[*rs_.find_ambient(v)];
        }
    {
        RationalVector v(n, Rational(0));
        v[0] += 1;
        v[n - 1] += 1;
        top_ = *rs_.find_ambient(v);
    }

    E_.assign(2 * m, RationalMatrix(d, d));
    for (int i = 1; i < n; ++i) {
        E_[i - 1] = C(i, i + 1);
        E_[rs_.negate(i - 1)] = C(i + 1, i);
    }
    E_[n - 1] = C(n, 2 * n);
    E_[rs_.negate(n - 1)] = C(2 * n, n);
    for (int g = n; g < m; ++g) {
        auto [a, b] = N_.extraspecial()[g];
        E_[g] = detail::mat_scale(detail::mat_bracket(E_[a], E_[b]), Rational(1) / N_(a, b));
        int na = rs_.negate(a), nb = rs_.negate(b);
        E_[rs_.negate(g)] = detail::mat_scale(detail::mat_bracket(E_[na], E_[nb]), Rational(1) / N_(na, nb));
    }
    twist_.resize(m);
    for (int b = 0; b < m; ++b) {
        RationalMatrix P = formula_matrix(b);
        const RationalMatrix& M = E_[rs_.negate(b)];
        std::optional<Rational> c;
        for (int i = 0; i < d && !c; ++i)
            for (int j = 0; j < d && !c; ++j)
                if (M(i, j) != 0) c = P(i, j) / M(i, j);
        if (!c || *c == 0 || !(detail::mat_scale(M, *c) == P)) throw InternalError("basis matrix is not a root vector");
        twist_[b] = *c;
    }
}

inline RationalMatrix SpContext::C(int p, int q) const
{
    const int n = n_;
    RationalMatrix m(2 * n, 2 * n);
    auto e = [&](int r, int c, int s) { m(r - 1, c - 1) += s; };
    if (p <= n && q <= n) {
        e(p, q, 1);
        e(n + q, n + p, -1);
    } else if (p <= n && q > n) {
        int j = q - n;
        e(p, q, 1);
        if (j != p) e(j, n + p, 1);
    } else if (p > n && q <= n) {
        int i = p - n;
        e(p, q, 1);
        if (i != q) e(n + q, i, 1);
    } else {
        throw std::invalid_argument("no basis element C with both indices above n");
    }
    return m;
}

inline RationalMatrix SpContext::formula_matrix(int beta) const
{
    RationalVector v = rs_.ambient(beta);
    int first = -1, second = -1;
    for (int i = 0; i < n_; ++i)
        if (v[i] != 0) (first < 0 ? first : second) = i;
    // e_j − e_i ↦ C_{i,j}; e_i + e_j ↦ C_{n+i,j}; 2e_k ↦ C_{n+k,k}.
    if (second < 0) return C(n_ + first + 1, first + 1);
    if (v[second] < 0) return C(second + 1, first + 1);
    return C(n_ + second + 1, first + 1);
}

inline int SpContext::var(int p, int q) const
{
    if (p > n_ && q > p - n_) {
        int i = p - n_;
        p = n_ + q;
        q = i;
    }
    auto it = var_.find({p, q});
    if (it == var_.end()) throw std::invalid_argument("no variable x_{" + std::to_string(p) + "," + std::to_string(q) + "}");
    return it->second;
}

inline bool SpContext::realization_consistent() const
{
    const int total = rs_.num_roots();
    for (int r = 0; r < total; ++r)
        for (int s = 0; s < total; ++s) {
            if (r == s || r == rs_.negate(s)) continue;
            RationalMatrix br = detail::mat_bracket(E_[r], E_[s]);
            auto t = rs_.sum(r, s);
            RationalMatrix want = t ? detail::mat_scale(E_[*t], Rational(N_(r, s))) : RationalMatrix(2 * n_, 2 * n_);
            if (!(br == want)) return false;
        }
    return true;
}

inline Rational SpContext::k_of(const Weight& lambda) const
{
    return coroot_pairing(rs_, lambda + rho(rs_), top_);
}

/// The closed-form singular vector of weight s_{e1+en}·λ in the C-basis:
/// coefficient k! Π_{i<n} ⟨u_i⟩_{r_i(a)} (k − r_i(a))! / Π a! on E^a, for a
/// of weight k(e_1+e_n).
inline PBWVector sp_formula(const SpContext& ctx, const Weight& lambda)
{
    const int n = ctx.n();
    if (n < 2) throw std::invalid_argument("the formula needs n ≥ 2");
    Rational kq = ctx.k_of(lambda);
    if (!is_natural(kq)) throw std::invalid_argument("⟨λ+ρ, (e1+en)^∨⟩ = " + to_string(kq) + " is not a natural number");
    const long k = to_long(kq);
    const RootSystem& rs = ctx.roots();
    auto layout = VariableLayout::make(rs, ctx.ordering());
    RootCoords target = rs.positive_coords(ctx.top_root());
    for (auto& c : target) c *= static_cast<int>(k);

    // u_i = λ_1 + … + λ_i for i < n−1, and u_{n−1} = λ_1 + … + λ_n. The last
    // one carries λ_n: this is what w(1) gives, and at n = 2 it is the
    // exponent λ_1 + λ_2 of the double sum.
    std::vector<Rational> u(n, Rational(0));
    for (int i = 1; i < n; ++i) u[i] = u[i - 1] + ctx.shifted(lambda, i);
    u[n - 1] += ctx.shifted(lambda, n);

    PBWVector v{lambda, {}};
    for (const auto& e : exponents_of_weight(rs, *layout, target)) {
        auto a = [&](int p, int q) { return e[ctx.var(p, q)]; };
        auto r = [&](int i) {
            long s = 0;
            if (i == n - 1) {
                for (int q = 1; q <= n; ++q)
                    for (int j = 1; j <= q; ++j)
                        if (j != n) s += a(n + q, j);
                return s;
            }
            for (int q = i + 2; q <= n; ++q)
                for (int j = 1; j <= i; ++j) s += a(q, j);
            for (int q = i + 1; q <= n; ++q)
                for (int j = 1; j <= i; ++j) s += a(n + q, j);
            for (int q = 1; q <= i; ++q)
                for (int j = 1; j <= q; ++j) s += 2 * a(n + q, j);
            return s;
        };
        Rational c(factorial(k));
        for (int i = 1; i < n; ++i) {
            long ri = r(i);
            if (ri > k) throw InternalError("r_i(a) exceeds k on the support");
            c *= falling_factorial(u[i], ri) * Rational(factorial(k - ri));
        }
        for (int x : e) c /= Rational(factorial(x));
        v.add(e, c);
    }
    return v;
}

/// Rewrites a C-basis vector in the Chevalley PBW basis: E^a_C = Π c_β^{a_β} E^a.
inline PBWVector sp_to_chevalley(const SpContext& ctx, const PBWVector& v)
{
    PBWVector out{v.lambda, {}};
    const auto& ord = ctx.ordering();
    for (const auto& [a, c] : v.coeffs) {
        Rational s = c;
        for (int t = 0; t < static_cast<int>(a.size()); ++t)
            for (int p = 0; p < a[t]; ++p) s *= ctx.twist(ord.order[t]);
        out.add(a, s);
    }
    return out;
}

/// The raising operators d_1..d_n in the C-basis variables, transcribed
/// from their closed forms.
inline std::vector<DiffOp> sp_raising_operators(const SpContext& ctx, const Weight& lambda)
{
    const int n = ctx.n(), m = ctx.roots().num_positive();
    auto xd = [&](int p, int q, int r, int s) { return compose(DiffOp::x(m, ctx.var(p, q)), DiffOp::partial(m, ctx.var(r, s))); };
    auto d = [&](int p, int q) { return DiffOp::partial(m, ctx.var(p, q)); };
    std::vector<DiffOp> out;
    for (int i = 1; i < n; ++i) {
        DiffOp inner = DiffOp::constant(m, ctx.shifted(lambda, i) - 1);
        for (int j = i + 1; j <= n; ++j) inner -= xd(j, i, j, i);
        for (int j = i + 2; j <= n; ++j) inner += xd(j, i + 1, j, i + 1);
        for (int k = 1; k <= n; ++k) {
            if (k == i || k == i + 1) continue;
            inner += xd(n + k, i + 1, n + k, i + 1);
            inner -= xd(n + k, i, n + k, i);
        }
        inner -= xd(n + i, i, n + i, i) * Rational(2);
        inner += xd(n + i + 1, i + 1, n + i + 1, i + 1) * Rational(2);
        DiffOp op = compose(inner, d(i + 1, i));
        for (int j = 1; j < i; ++j) op += xd(i, j, i + 1, j);
        for (int j = i + 2; j <= n; ++j) op -= xd(j, i + 1, j, i);
        for (int k = 1; k <= n; ++k)
            if (k != i + 1) op -= xd(n + k, i + 1, n + k, i);
        op -= xd(n + i + 1, i + 1, n + i + 1, i) * Rational(2);
        out.push_back(op);
    }
    DiffOp dn = compose(DiffOp::constant(m, ctx.shifted(lambda, n) - 1) - xd(2 * n, n, 2 * n, n), d(2 * n, n));
    for (int i = 1; i < n; ++i) {
        DiffOp inner = DiffOp::x(m, ctx.var(n, i));
        for (int j = 1; j <= i; ++j) inner += xd(n + i, j, 2 * n, j);
        dn += compose(inner, d(2 * n, i));
    }
    out.push_back(dn);
    return out;
}

}  // namespace verma

#endif  // VERMA_SP_FORMULA_HPP
