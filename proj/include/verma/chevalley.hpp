#ifndef VERMA_CHEVALLEY_HPP
#define VERMA_CHEVALLEY_HPP

#include <cstdlib>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "verma/rational.hpp"
#include "verma/root_system.hpp"

namespace verma {

/// The α-string through β: β − pα, ..., β + qα.
inline std::pair<int, int> root_string(const RootSystem& rs, int alpha, int beta)
{
    if (alpha == beta || alpha == rs.negate(beta))
        throw std::invalid_argument("root string needs beta != +-alpha");
    auto step = [&](int sign) {
        int k = 0;
        RootCoords c = rs.coords(beta), a = rs.coords(alpha);
        while (true) {
            for (int i = 0; i < rs.rank(); ++i) c[i] += sign * a[i];
            if (!rs.find(c)) return k;
            ++k;
        }
    };
    return {step(-1), step(+1)};
}

/// Structure constants N_{α,β} of a Chevalley basis, [E_α, E_β] = N_{α,β} E_{α+β}.
///
/// Signs follow the extraspecial-pair convention with respect to the root-id
/// order (height, then descending coefficients): for every positive γ the
/// pair (α, γ−α) with α minimal has N = +(p+1). All remaining constants are
/// forced by the Jacobi identity.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs);

    const RootSystem& roots() const { return *rs_; }

    /// N_{a,b}, or 0 when a + b is not a root.
    int operator()(int a, int b) const { return table_[a * size_ + b]; }

    /// The extraspecial pair of every positive non-simple root, indexed by root id
    /// ({-1,-1} for simple roots).
    const std::vector<std::pair<int, int>>& extraspecial() const { return extraspecial_; }

private:
    int& at(int a, int b) { return table_[a * size_ + b]; }
    Rational mixed(int x, int negy) const;

    const RootSystem* rs_;
    int size_;
    std::vector<int> table_;
    std::vector<std::pair<int, int>> extraspecial_;
};

// N_{x,-y} for positive x, y with x - y a root, from already known positive pairs.
inline Rational StructureConstants::mixed(int x, int negy) const
{
    const RootSystem& rs = *rs_;
    int y = rs.negate(negy);
    auto d = rs.difference(x, y);
    if (!d) return 0;
    int delta = *d;
    if (rs.is_positive(delta)) return -Rational(rs.norm2(delta)) / rs.norm2(x) * (*this)(y, delta);
    delta = rs.negate(delta);
    return Rational(rs.norm2(delta)) / rs.norm2(y) * (*this)(delta, x);
}

inline StructureConstants::StructureConstants(const RootSystem& rs)
    : rs_(&rs), size_(rs.num_roots()), table_(rs.num_roots() * rs.num_roots(), 0),
      extraspecial_(rs.num_positive(), {-1, -1})
{
    const int m = rs.num_positive();
    auto lookup = [&](int a, int b) -> Rational {
        // Positive/negative mixtures on the fly; positive pairs from the table.
        if (!rs.sum(a, b)) return 0;
        bool pa = rs.is_positive(a), pb = rs.is_positive(b);
        if (pa && pb) return (*this)(a, b);
        if (pa && !pb) return mixed(a, b);
        if (!pa && pb) return -mixed(b, a);
        return -(*this)(rs.negate(a), rs.negate(b));
    };
    // Ids are sorted by height, so every sum appears after its summands.
    for (int g = 0; g < m; ++g) {
        if (rs.is_simple(g)) continue;
        int alpha = -1, beta = -1;
        for (int a = 0; a < m && alpha < 0; ++a) {
            auto b = rs.difference(g, a);
            if (b && rs.is_positive(*b) && a < *b) {
                alpha = a;
                beta = *b;
            }
        }
        if (alpha < 0) throw InternalError("positive root without a decomposition");
        extraspecial_[g] = {alpha, beta};
        int nab = root_string(rs, alpha, beta).first + 1;
        at(alpha, beta) = nab;
        at(beta, alpha) = -nab;
        for (int xi = alpha + 1; xi < m; ++xi) {
            auto z = rs.difference(g, xi);
            if (!z || !rs.is_positive(*z) || *z <= xi) continue;
            int zeta = *z;
            Rational val(0);
            if (rs.difference(beta, xi)) val += lookup(beta, rs.negate(xi)) * lookup(alpha, rs.negate(zeta)) / rs.norm2(*rs.difference(beta, xi));
            if (rs.difference(alpha, xi)) val += lookup(rs.negate(xi), alpha) * lookup(beta, rs.negate(zeta)) / rs.norm2(*rs.difference(alpha, xi));
            val *= Rational(rs.norm2(g)) / nab;
            if (!is_integer(val)) throw InternalError("non-integral structure constant");
            int n = static_cast<int>(to_long(val));
            if (std::abs(n) != root_string(rs, xi, zeta).first + 1)
                throw InternalError("structure constant of wrong magnitude");
            at(xi, zeta) = n;
            at(zeta, xi) = -n;
        }
    }
    for (int a = 0; a < 2 * m; ++a)
        for (int b = 0; b < 2 * m; ++b) {
            if (rs.is_positive(a) && rs.is_positive(b)) continue;
            if (!rs.sum(a, b)) continue;
            Rational v = lookup(a, b);
            if (!is_integer(v)) throw InternalError("non-integral structure constant");
            at(a, b) = static_cast<int>(to_long(v));
        }
}

/// Element of g in the Chevalley basis: coefficients of E_r for every root id,
/// followed by the simple coroots H_1..H_n.
class LieElement {
public:
    LieElement() = default;
    explicit LieElement(const RootSystem& rs) : c_(rs.num_roots() + rs.rank(), Rational(0)) {}

    static LieElement root_vector(const RootSystem& rs, int id)
    {
        LieElement e(rs);
        e.c_[id] = 1;
        return e;
    }
    static LieElement cartan(const RootSystem& rs, int i)
    {
        LieElement e(rs);
        e.c_[rs.num_roots() + i] = 1;
        return e;
    }
    /// H_β = β^∨ written in the simple coroots.
    static LieElement coroot(const RootSystem& rs, int beta)
    {
        LieElement e(rs);
        RootCoords b = rs.coords(beta);
        for (int i = 0; i < rs.rank(); ++i)
            e.c_[rs.num_roots() + i] = b[i] * rs.norm2(i) / rs.norm2(beta);
        return e;
    }

    std::size_t size() const { return c_.size(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    LieElement& operator+=(const LieElement& o)
    {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    LieElement operator*(const Rational& s) const
    {
        LieElement r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    bool is_zero() const
    {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const LieElement&) const = default;

private:
    std::vector<Rational> c_;
};

/// Lie bracket of basis elements and its bilinear extension.
inline LieElement bracket(const StructureConstants& N, const LieElement& x, const LieElement& y)
{
    const RootSystem& rs = N.roots();
    const int nr = rs.num_roots();
    LieElement out(rs);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            Rational s = x[i] * y[j];
            int a = static_cast<int>(i), b = static_cast<int>(j);
            if (a < nr && b < nr) {
                if (b == rs.negate(a)) {
                    out += LieElement::coroot(rs, rs.positive_part(a)) * (rs.is_positive(a) ? s : Rational(-s));
                } else if (auto c = rs.sum(a, b)) {
                    out[*c] += s * N(a, b);
                }
            } else if (a >= nr && b < nr) {
                out[b] += s * rs.pairing(b, a - nr);
            } else if (a < nr && b >= nr) {
                out[a] -= s * rs.pairing(a, b - nr);
            }
        }
    }
    return out;
}

/// Jacobi identity on E_a, E_b, E_c.
inline bool jacobi_holds(const StructureConstants& N, int a, int b, int c)
{
    const RootSystem& rs = N.roots();
    auto A = LieElement::root_vector(rs, a), B = LieElement::root_vector(rs, b), C = LieElement::root_vector(rs, c);
    LieElement s = bracket(N, A, bracket(N, B, C));
    s += bracket(N, B, bracket(N, C, A));
    s += bracket(N, C, bracket(N, A, B));
    return s.is_zero();
}

struct ConstantsReport {
    bool antisymmetric = true;
    bool magnitudes = true;
    bool negation = true;
    bool cyclic = true;  // simply-laced only; vacuously true otherwise
    std::size_t jacobi_checked = 0;
    std::size_t jacobi_failed = 0;

    bool ok() const { return antisymmetric && magnitudes && negation && cyclic && jacobi_failed == 0; }
};

/// Checks every stored invariant of the table and the Jacobi identity on
/// `triples` random root triples (all triples when `triples` is 0).
inline ConstantsReport check_constants(const StructureConstants& N, std::size_t triples, unsigned seed = 1)
{
    const RootSystem& rs = N.roots();
    const int r = rs.num_roots();
    ConstantsReport rep;
    bool simply_laced = true;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (rs.norm2(i) != rs.norm2(0)) simply_laced = false;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            auto s = rs.sum(a, b);
            int n = N(a, b);
            if (!s) {
                if (n != 0) rep.magnitudes = false;
                continue;
            }
            if (n != -N(b, a)) rep.antisymmetric = false;
            if (std::abs(n) != root_string(rs, a, b).first + 1) rep.magnitudes = false;
            if (N(rs.negate(a), rs.negate(b)) != -n) rep.negation = false;
            if (simply_laced) {
                int c = rs.negate(*s);
                if (N(b, c) != n || N(c, a) != n) rep.cyclic = false;
            }
        }
    if (triples == 0) {
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                for (int c = 0; c < r; ++c) {
                    ++rep.jacobi_checked;
                    if (!jacobi_holds(N, a, b, c)) ++rep.jacobi_failed;
                }
    } else {
        std::mt19937 gen(seed);
        std::uniform_int_distribution<int> pick(0, r - 1);
        for (std::size_t t = 0; t < triples; ++t) {
            ++rep.jacobi_checked;
            if (!jacobi_holds(N, pick(gen), pick(gen), pick(gen))) ++rep.jacobi_failed;
        }
    }
    return rep;
}

}  // namespace verma

#endif  // VERMA_CHEVALLEY_HPP
