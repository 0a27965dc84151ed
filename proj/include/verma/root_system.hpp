#ifndef VERMA_ROOT_SYSTEM_HPP
#define VERMA_ROOT_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "verma/linalg.hpp"
#include "verma/rational.hpp"

namespace verma {

using RootCoords = std::vector<int>;  // coefficients in the simple roots

/// A finite crystallographic root system realized in its standard
/// orthonormal ambient space.
///
/// Roots carry integer ids: 0..m-1 are the positive roots sorted by height
/// (ties broken by descending coefficient vectors, so simple root i has id i),
/// and id + m is the negative of root id.
class RootSystem {
public:
    RootSystem(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

    int num_positive() const { return static_cast<int>(pos_.size()); }
    int num_roots() const { return 2 * num_positive(); }
    int ambient_dim() const { return static_cast<int>(simple_ambient_.front().size()); }
    int max_height() const { return height(num_positive() - 1); }

    bool is_positive(int id) const { return id < num_positive(); }
    int negate(int id) const { return is_positive(id) ? id + num_positive() : id - num_positive(); }
    int positive_part(int id) const { return is_positive(id) ? id : id - num_positive(); }
    bool is_simple(int id) const { return id < rank_; }

    /// Coefficients of root `id` in the simple roots (negative for negative roots).
    RootCoords coords(int id) const;
    const RootCoords& positive_coords(int id) const { return pos_[id]; }
    int height(int id) const;
    /// Ambient vector of root `id`.
    RationalVector ambient(int id) const;

    /// (β, β) for root `id`.
    const Rational& norm2(int id) const { return norm2_[positive_part(id)]; }
    /// Inner product of two roots in the ambient space.
    Rational inner(int a, int b) const;

    /// ⟨β, γ^∨⟩ = 2(β,γ)/(γ,γ).
    int pairing(int beta, int gamma) const;

    /// Id of the root with the given simple-root coefficients.
    std::optional<int> find(const RootCoords& c) const;
    /// Id of a + b if it is a root.
    std::optional<int> sum(int a, int b) const;
    std::optional<int> difference(int a, int b) const { return sum(a, negate(b)); }

    /// A_ij = ⟨α_i, α_j^∨⟩.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const RationalMatrix& inverse_cartan() const { return inv_cartan_; }
    const std::vector<RationalVector>& simple_ambient() const { return simple_ambient_; }

    /// ρ in the ambient space (half the sum of the positive roots).
    RationalVector rho_ambient() const;

    /// Positive roots of height h (the layer Φ_h), in id order.
    std::vector<int> layer(int h) const;
    /// k_h = |Φ_h| for h = 1..max_height().
    std::vector<int> layer_sizes() const;

    /// Root id of the ambient vector, if any.
    std::optional<int> find_ambient(const RationalVector& v) const;

    /// Human-readable label of a positive root in the ambient e-basis,
    /// e.g. "e1-e2", "2e2", "1/2(e1-e2-e3-e4)".
    std::string ambient_label(int id) const;

private:
    char type_;
    int rank_;
    std::vector<RationalVector> simple_ambient_;
    std::vector<std::vector<int>> cartan_;
    RationalMatrix inv_cartan_;
    std::vector<RootCoords> pos_;
    std::vector<Rational> norm2_;
    std::map<RootCoords, int> index_;
};

namespace detail {

inline RationalVector unit(int dim, int i, long scale = 1)
{
    RationalVector v(dim, Rational(0));
    v[i] = scale;
    return v;
}

inline RationalVector ambient_from(int dim, std::initializer_list<std::pair<int, Rational>> entries)
{
    RationalVector v(dim, Rational(0));
    for (const auto& [i, c] : entries) v[i] = c;
    return v;
}

inline std::vector<RationalVector> standard_simple_roots(char type, int n)
{
    auto bad = [&]() {
        return std::invalid_argument("invalid Cartan type " + std::string(1, type) + std::to_string(n));
    };
    if (n < 1 || n > 8) throw bad();
    std::vector<RationalVector> s;
    auto chain = [&](int dim, int count) {
        for (int i = 0; i < count; ++i) {
            auto v = unit(dim, i);
            v[i + 1] = -1;
            s.push_back(v);
        }
    };
    const Rational half(1, 2);
    switch (type) {
    case 'A':
        chain(n + 1, n);
        break;
    case 'B':
        if (n < 2) throw bad();
        chain(n, n - 1);
        s.push_back(unit(n, n - 1));
        break;
    case 'C':
        if (n < 2) throw bad();
        chain(n, n - 1);
        s.push_back(unit(n, n - 1, 2));
        break;
    case 'D':
        if (n < 4) throw bad();
        chain(n, n - 1);
        s.push_back(ambient_from(n, {{n - 2, 1}, {n - 1, 1}}));
        break;
    case 'E': {
        if (n < 6) throw bad();
        RationalVector a1(8, -half);
        a1[0] = half;
        a1[7] = half;
        s.push_back(a1);
        s.push_back(ambient_from(8, {{0, 1}, {1, 1}}));
        for (int i = 0; i + 2 < n; ++i) s.push_back(ambient_from(8, {{i + 1, 1}, {i, -1}}));
        break;
    }
    case 'F':
        if (n != 4) throw bad();
        s.push_back(ambient_from(4, {{1, 1}, {2, -1}}));
        s.push_back(ambient_from(4, {{2, 1}, {3, -1}}));
        s.push_back(unit(4, 3));
        s.push_back(ambient_from(4, {{0, half}, {1, -half}, {2, -half}, {3, -half}}));
        break;
    case 'G':
        if (n != 2) throw bad();
        s.push_back(ambient_from(3, {{0, 1}, {1, -1}}));
        s.push_back(ambient_from(3, {{0, -2}, {1, 1}, {2, 1}}));
        break;
    default:
        throw bad();
    }
    return s;
}

inline Rational dot(const RationalVector& a, const RationalVector& b)
{
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

inline RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank)
{
    simple_ambient_ = detail::standard_simple_roots(type, rank);
    const int n = rank;
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational p = 2 * detail::dot(simple_ambient_[i], simple_ambient_[j]) /
                         detail::dot(simple_ambient_[j], simple_ambient_[j]);
            cartan_[i][j] = static_cast<int>(to_long(p));
        }

    // Root strings: β + α_i is a root iff q > 0 where p - q = ⟨β, α_i^∨⟩.
    std::map<RootCoords, int> seen;
    std::vector<RootCoords> roots;
    for (int i = 0; i < n; ++i) {
        RootCoords c(n, 0);
        c[i] = 1;
        seen[c] = 1;
        roots.push_back(c);
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const RootCoords beta = roots[k];
        for (int i = 0; i < n; ++i) {
            int pair = 0;
            for (int j = 0; j < n; ++j) pair += beta[j] * cartan_[j][i];
            int p = 0;
            RootCoords down = beta;
            while (true) {
                down[i] -= 1;
                if (!seen.count(down)) break;
                ++p;
            }
            RootCoords up = beta;
            up[i] += 1;
            if (p - pair > 0 && !seen.count(up)) {
                seen[up] = 1;
                roots.push_back(up);
            }
        }
    }
    auto ht = [](const RootCoords& c) {
        int h = 0;
        for (int v : c) h += v;
        return h;
    };
    std::sort(roots.begin(), roots.end(), [&](const RootCoords& a, const RootCoords& b) {
        int ha = ht(a), hb = ht(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    pos_ = roots;
    for (int id = 0; id < num_positive(); ++id) {
        index_[pos_[id]] = id;
        RootCoords neg = pos_[id];
        for (auto& v : neg) v = -v;
        index_[neg] = id + num_positive();
        auto amb = ambient(id);
        norm2_.push_back(detail::dot(amb, amb));
    }

    RationalMatrix a(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = cartan_[i][j];
        a(i, n + i) = 1;
    }
    auto piv = rref(a);
    if (static_cast<int>(piv.size()) != n) throw InternalError("singular Cartan matrix");
    inv_cartan_ = RationalMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv_cartan_(i, j) = a(i, n + j);
}

inline RootCoords RootSystem::coords(int id) const
{
    RootCoords c = pos_[positive_part(id)];
    if (!is_positive(id))
        for (auto& v : c) v = -v;
    return c;
}

inline int RootSystem::height(int id) const
{
    int h = 0;
    for (int v : pos_[positive_part(id)]) h += v;
    return is_positive(id) ? h : -h;
}

inline RationalVector RootSystem::ambient(int id) const
{
    RationalVector v(ambient_dim(), Rational(0));
    RootCoords c = coords(id);
    for (int i = 0; i < rank_; ++i)
        if (c[i])
            for (int k = 0; k < ambient_dim(); ++k) v[k] += c[i] * simple_ambient_[i][k];
    return v;
}

inline Rational RootSystem::inner(int a, int b) const
{
    return detail::dot(ambient(a), ambient(b));
}

inline int RootSystem::pairing(int beta, int gamma) const
{
    return static_cast<int>(to_long(2 * inner(beta, gamma) / norm2(gamma)));
}

inline std::optional<int> RootSystem::find(const RootCoords& c) const
{
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

inline std::optional<int> RootSystem::sum(int a, int b) const
{
    RootCoords c = coords(a), d = coords(b);
    for (int i = 0; i < rank_; ++i) c[i] += d[i];
    return find(c);
}

inline RationalVector RootSystem::rho_ambient() const
{
    RationalVector r(ambient_dim(), Rational(0));
    for (int id = 0; id < num_positive(); ++id) {
        auto v = ambient(id);
        for (int k = 0; k < ambient_dim(); ++k) r[k] += v[k] / 2;
    }
    return r;
}

inline std::vector<int> RootSystem::layer(int h) const
{
    std::vector<int> out;
    for (int id = 0; id < num_positive(); ++id)
        if (height(id) == h) out.push_back(id);
    return out;
}

inline std::vector<int> RootSystem::layer_sizes() const
{
    std::vector<int> k(max_height(), 0);
    for (int id = 0; id < num_positive(); ++id) ++k[height(id) - 1];
    return k;
}

inline std::optional<int> RootSystem::find_ambient(const RationalVector& v) const
{
    if (static_cast<int>(v.size()) != ambient_dim()) return std::nullopt;
    for (int id = 0; id < num_roots(); ++id)
        if (ambient(id) == v) return id;
    return std::nullopt;
}

inline std::string RootSystem::ambient_label(int id) const
{
    auto v = ambient(id);
    Rational scale(0);
    for (const auto& c : v)
        if (c != 0) {
            scale = abs(c);
            break;
        }
    bool halves = scale == Rational(1, 2);
    std::string out;
    for (int k = 0; k < ambient_dim(); ++k) {
        Rational c = halves ? Rational(v[k] * 2) : v[k];
        if (c == 0) continue;
        if (sgn(c) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        Rational a = abs(c);
        if (a != 1) out += to_string(a);
        out += "e" + std::to_string(k + 1);
    }
    return halves ? "1/2(" + out + ")" : out;
}

/// Parses a root label in the ambient e-basis, such as "e1+e2", "2e2",
/// "e1-e3", or a simple-root coefficient list such as "1,1".
inline std::optional<int> parse_root(const RootSystem& rs, const std::string& text)
{
    if (text.find('e') == std::string::npos) {
        auto vals = parse_rational_list(text);
        if (static_cast<int>(vals.size()) != rs.rank()) return std::nullopt;
        RootCoords c;
        for (const auto& v : vals) c.push_back(static_cast<int>(to_long(v)));
        return rs.find(c);
    }
    std::string s;
    Rational outer(1);
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.rfind("1/2(", 0) == 0 && s.back() == ')') {
        outer = Rational(1, 2);
        s = s.substr(4, s.size() - 5);
    }
    RationalVector v(rs.ambient_dim(), Rational(0));
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t e = s.find('e', i);
        if (e == std::string::npos) throw std::invalid_argument("malformed root label '" + text + "'");
        Rational coef = e == i ? Rational(1) : parse_rational(s.substr(i, e - i));
        std::size_t j = e + 1;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        if (j == e + 1) throw std::invalid_argument("malformed root label '" + text + "'");
        int k = std::stoi(s.substr(e + 1, j - e - 1)) - 1;
        if (k < 0 || k >= rs.ambient_dim()) throw std::invalid_argument("basis index out of range in '" + text + "'");
        v[k] += sign * coef * outer;
        i = j;
    }
    return rs.find_ambient(v);
}

/// A weight given by its Dynkin labels λ_i = ⟨λ, α_i^∨⟩.
struct Weight {
    RationalVector coords;

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight& o) const
    {
        // gmpxx has no <=>; compare lexicographically by hand.
        for (std::size_t i = 0; i < coords.size() && i < o.coords.size(); ++i) {
            int c = cmp(coords[i], o.coords[i]);
            if (c != 0) return c <=> 0;
        }
        return coords.size() <=> o.coords.size();
    }
};

inline Weight zero_weight(const RootSystem& rs) { return {RationalVector(rs.rank(), Rational(0))}; }

inline Weight rho(const RootSystem& rs) { return {RationalVector(rs.rank(), Rational(1))}; }

inline Weight operator+(Weight a, const Weight& b)
{
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
}

inline Weight operator-(Weight a, const Weight& b)
{
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
}

/// Dynkin labels of the root `id`.
inline Weight root_weight(const RootSystem& rs, int id)
{
    Weight w = zero_weight(rs);
    RootCoords c = rs.coords(id);
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) w.coords[j] += c[i] * rs.cartan()[i][j];
    return w;
}

/// Dynkin labels of Σ c_i α_i.
inline Weight combination_weight(const RootSystem& rs, const std::vector<Rational>& c)
{
    Weight w = zero_weight(rs);
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) w.coords[j] += c[i] * rs.cartan()[i][j];
    return w;
}

/// Coefficients of μ in the simple roots.
inline RationalVector simple_coordinates(const RootSystem& rs, const Weight& mu)
{
    RationalVector c(rs.rank(), Rational(0));
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) c[i] += mu.coords[j] * rs.inverse_cartan()(j, i);
    return c;
}

/// ⟨μ, β^∨⟩.
inline Rational coroot_pairing(const RootSystem& rs, const Weight& mu, int beta)
{
    RootCoords b = rs.coords(beta);
    Rational s(0);
    for (int i = 0; i < rs.rank(); ++i)
        if (b[i]) s += b[i] * rs.norm2(i) / rs.norm2(beta) * mu.coords[i];
    return s;
}

/// Ordinary reflection s_β μ = μ − ⟨μ, β^∨⟩ β.
inline Weight reflect(const RootSystem& rs, const Weight& mu, int beta)
{
    Rational k = coroot_pairing(rs, mu, beta);
    Weight b = root_weight(rs, beta);
    Weight out = mu;
    for (int i = 0; i < rs.rank(); ++i) out.coords[i] -= k * b.coords[i];
    return out;
}

/// An element of W as a word s_{i1} s_{i2} ... s_{ik} in the simple
/// reflections (0-based indices); the rightmost letter acts first.
struct WeylElement {
    std::vector<int> word;

    WeylElement operator*(const WeylElement& o) const
    {
        WeylElement r = *this;
        r.word.insert(r.word.end(), o.word.begin(), o.word.end());
        return r;
    }
    WeylElement inverse() const { return {std::vector<int>(word.rbegin(), word.rend())}; }
};

/// Ordinary action w(μ).
inline Weight weyl_act(const RootSystem& rs, const WeylElement& w, Weight mu)
{
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        int i = *it;
        if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple reflection index out of range");
        Rational k = mu.coords[i];
        for (int j = 0; j < rs.rank(); ++j) mu.coords[j] -= k * rs.cartan()[i][j];
    }
    return mu;
}

/// w·λ = w(λ+ρ) − ρ.
inline Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda)
{
    return weyl_act(rs, w, lambda + rho(rs)) - rho(rs);
}

/// Two words represent the same element iff they agree on the regular weight ρ.
inline bool same_element(const RootSystem& rs, const WeylElement& a, const WeylElement& b)
{
    return weyl_act(rs, a, rho(rs)) == weyl_act(rs, b, rho(rs));
}

/// Root id of w(β), obtained by applying simple reflections to coordinates.
inline int weyl_act_root(const RootSystem& rs, const WeylElement& w, int beta)
{
    RootCoords c = rs.coords(beta);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        int i = *it, pair = 0;
        for (int j = 0; j < rs.rank(); ++j) pair += c[j] * rs.cartan()[j][i];
        c[i] -= pair;
    }
    auto id = rs.find(c);
    if (!id) throw InternalError("Weyl group image is not a root");
    return *id;
}

/// Every element of W with a reduced word, in order of increasing length.
/// Throws std::invalid_argument if |W| exceeds `limit`.
inline std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::size_t limit = 50000)
{
    std::map<Weight, std::size_t> seen;
    std::vector<WeylElement> out{{}};
    std::vector<Weight> images{rho(rs)};
    seen[rho(rs)] = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int i = 0; i < rs.rank(); ++i) {
            Weight img = weyl_act(rs, WeylElement{{i}}, images[k]);
            if (seen.count(img)) continue;
            if (out.size() >= limit) throw std::invalid_argument("Weyl group of " + rs.name() + " is too large to enumerate");
            seen[img] = out.size();
            WeylElement w{{i}};
            w.word.insert(w.word.end(), out[k].word.begin(), out[k].word.end());
            out.push_back(w);
            images.push_back(img);
        }
    }
    return out;
}

/// A word for the reflection s_γ of the form u s_α u^{-1}, α simple.
inline WeylElement reflection_word(const RootSystem& rs, int gamma)
{
    gamma = rs.positive_part(gamma);
    if (rs.is_simple(gamma)) return {{gamma}};
    for (int i = rs.rank() - 1; i >= 0; --i) {
        int p = rs.pairing(gamma, i);
        if (p <= 0) continue;
        RootCoords c = rs.coords(gamma);
        c[i] -= p;
        auto lower = rs.find(c);
        if (!lower) throw InternalError("reflected root not found");
        WeylElement inner = reflection_word(rs, *lower);
        WeylElement out{{i}};
        out.word.insert(out.word.end(), inner.word.begin(), inner.word.end());
        out.word.push_back(i);
        return out;
    }
    throw InternalError("no simple root pairs positively with a non-simple root");
}

/// λ ∈ h* with ⟨λ+ρ, β^∨⟩ < 0 for every positive root.
inline bool is_antidominant(const RootSystem& rs, const Weight& lambda)
{
    Weight shifted = lambda + rho(rs);
    for (int id = 0; id < rs.num_positive(); ++id)
        if (sgn(coroot_pairing(rs, shifted, id)) >= 0) return false;
    return true;
}

/// One ↑-step λ' → s_γ·λ' = λ' − kγ with k = ⟨λ'+ρ, γ^∨⟩ ∈ ℤ_{>0}.
struct LinkageStep {
    int root = 0;
    Rational k;
    Weight weight;  // weight after the step
};

struct LinkageChain {
    Weight source;
    Weight target;
    std::vector<LinkageStep> steps;  // from source down to target
};

inline bool in_natural_span(const RootSystem& rs, const Weight& diff)
{
    for (const auto& c : simple_coordinates(rs, diff))
        if (!is_natural(c)) return false;
    return true;
}

/// Breadth-first search for a strong-linkage chain μ ↑ λ.
inline std::optional<LinkageChain> strongly_linked(const RootSystem& rs, const Weight& lambda, const Weight& mu)
{
    if (!in_natural_span(rs, lambda - mu)) return std::nullopt;
    struct Node {
        Weight w;
        int parent;
        int root;
        Rational k;
    };
    std::vector<Node> nodes{{lambda, -1, -1, Rational(0)}};
    std::map<Weight, int> seen{{lambda, 0}};
    std::optional<int> hit;
    if (lambda == mu) hit = 0;
    for (std::size_t q = 0; q < nodes.size() && !hit; ++q) {
        Weight shifted = nodes[q].w + rho(rs);
        for (int g = 0; g < rs.num_positive() && !hit; ++g) {
            Rational k = coroot_pairing(rs, shifted, g);
            if (!is_integer(k) || sgn(k) <= 0) continue;
            Weight next = nodes[q].w;
            Weight gw = root_weight(rs, g);
            for (int i = 0; i < rs.rank(); ++i) next.coords[i] -= k * gw.coords[i];
            if (seen.count(next) || !in_natural_span(rs, next - mu)) continue;
            seen[next] = static_cast<int>(nodes.size());
            nodes.push_back({next, static_cast<int>(q), g, k});
            if (next == mu) hit = static_cast<int>(nodes.size()) - 1;
        }
    }
    if (!hit) return std::nullopt;
    LinkageChain chain{lambda, mu, {}};
    for (int at = *hit; nodes[at].parent >= 0; at = nodes[at].parent)
        chain.steps.push_back({nodes[at].root, nodes[at].k, nodes[at].w});
    std::reverse(chain.steps.begin(), chain.steps.end());
    return chain;
}

/// Every μ ↑ λ whose difference λ − μ has height at most `bound`, each with
/// a witness chain. The list starts with λ itself.
inline std::vector<LinkageChain> all_singular_weights(const RootSystem& rs, const Weight& lambda, int bound)
{
    std::vector<LinkageChain> out{{lambda, lambda, {}}};
    std::map<Weight, std::size_t> seen{{lambda, 0}};
    for (std::size_t q = 0; q < out.size(); ++q) {
        Weight cur = out[q].target;
        Weight shifted = cur + rho(rs);
        for (int g = 0; g < rs.num_positive(); ++g) {
            Rational k = coroot_pairing(rs, shifted, g);
            if (!is_integer(k) || sgn(k) <= 0) continue;
            Weight next = cur;
            Weight gw = root_weight(rs, g);
            for (int i = 0; i < rs.rank(); ++i) next.coords[i] -= k * gw.coords[i];
            Rational ht(0);
            for (const auto& c : simple_coordinates(rs, lambda - next)) ht += c;
            if (ht > bound || seen.count(next)) continue;
            LinkageChain chain = out[q];
            chain.target = next;
            chain.steps.push_back({g, k, next});
            seen[next] = out.size();
            out.push_back(std::move(chain));
        }
    }
    return out;
}

/// An ordering ι of Φ⁺: `order[t]` is the root at position t (0-based).
struct Ordering {
    std::vector<int> order;
    std::vector<int> position;  // inverse of order
    bool good = false;

    int size() const { return static_cast<int>(order.size()); }
};

inline Ordering make_ordering(const RootSystem& rs, std::vector<int> order)
{
    if (static_cast<int>(order.size()) != rs.num_positive())
        throw std::invalid_argument("ordering must list every positive root once");
    Ordering o;
    o.position.assign(rs.num_positive(), -1);
    for (int t = 0; t < static_cast<int>(order.size()); ++t) {
        int r = order[t];
        if (r < 0 || r >= rs.num_positive() || o.position[r] >= 0)
            throw std::invalid_argument("ordering must list every positive root once");
        o.position[r] = t;
    }
    o.order = std::move(order);
    return o;
}

/// β_1 > β_2 > ... > β_m lexicographically in simple-root coefficients,
/// with α_1 > α_2 > ... > α_n.
inline Ordering lex_ordering(const RootSystem& rs)
{
    std::vector<int> ids(rs.num_positive());
    for (int i = 0; i < rs.num_positive(); ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return rs.positive_coords(a) > rs.positive_coords(b); });
    return make_ordering(rs, ids);
}

/// The ordering of the sp(2n) PBW basis: C_{i,j} = E_{-(e_j - e_i)} for
/// j < i, i = 2..n, followed by C_{n+i,j} = E_{-(e_i + e_j)} for j ≤ i,
/// i = 1..n, each group in increasing i and then j.
inline Ordering sp_ordering(const RootSystem& rs)
{
    if (rs.type() != 'C') throw std::invalid_argument("sp ordering needs a type C root system");
    const int n = rs.rank();
    std::vector<int> ids;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            RationalVector v(n, Rational(0));
            v[j - 1] = 1;
            v[i - 1] = -1;
            ids.push_back(*rs.find_ambient(v));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            RationalVector v(n, Rational(0));
            v[j - 1] += 1;
            v[i - 1] += 1;
            ids.push_back(*rs.find_ambient(v));
        }
    return make_ordering(rs, ids);
}

}  // namespace verma

#endif  // VERMA_ROOT_SYSTEM_HPP
