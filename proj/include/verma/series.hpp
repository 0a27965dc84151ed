#ifndef VERMA_SERIES_HPP
#define VERMA_SERIES_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "verma/diffop.hpp"
#include "verma/rational.hpp"
#include "verma/root_system.hpp"

namespace verma {

/// Per-variable data shared by all series over one ordered root system.
struct VariableLayout {
    std::vector<int> root;    // root id at each position
    std::vector<int> height;  // its height
    std::vector<bool> simple;

    int size() const { return static_cast<int>(root.size()); }

    static std::shared_ptr<const VariableLayout> make(const RootSystem& rs, const Ordering& o)
    {
        auto l = std::make_shared<VariableLayout>();
        for (int t = 0; t < o.size(); ++t) {
            l->root.push_back(o.order[t]);
            l->height.push_back(rs.height(o.order[t]));
            l->simple.push_back(rs.is_simple(o.order[t]));
        }
        return l;
    }
};

/// An element of the space of truncated-up power series: simple-root
/// variables carry exponents z_t + k with a fixed fractional class z_t and
/// k ∈ ℤ, all other variables carry natural exponents.
///
/// The drop of a term is Σ e_t ht(β_t) over non-simple positions. A series
/// with depth D is exact on every term of drop ≤ D and stores nothing
/// beyond; a series without depth is exact.
class Series {
public:
    using Key = std::vector<int>;  // integer part of each exponent
    using Terms = std::map<Key, Rational>;

    Series() = default;
    explicit Series(std::shared_ptr<const VariableLayout> layout, std::optional<int> depth = std::nullopt)
        : layout_(std::move(layout)), base_(layout_->size(), Rational(0)), depth_(depth)
    {
    }

    static Series one(std::shared_ptr<const VariableLayout> layout)
    {
        Series s(std::move(layout));
        s.terms_[Key(s.layout_->size(), 0)] = 1;
        return s;
    }

    /// c x^e for a monomial with rational exponents (natural off the simples).
    static Series monomial(std::shared_ptr<const VariableLayout> layout, const RationalVector& e, const Rational& c = 1)
    {
        Series s(std::move(layout));
        Key k(e.size(), 0);
        for (int t = 0; t < s.layout_->size(); ++t) {
            if (!s.layout_->simple[t] && !is_natural(e[t]))
                throw std::invalid_argument("non-natural exponent on a non-simple variable");
            Rational fl = floor_of(e[t]);
            s.base_[t] = e[t] - fl;
            k[t] = static_cast<int>(to_long(fl));
        }
        if (c != 0) s.terms_[k] = c;
        return s;
    }

    static Series from_polynomial(std::shared_ptr<const VariableLayout> layout, const Polynomial& p)
    {
        Series s(std::move(layout));
        for (const auto& [e, c] : p) s.add(Key(e.begin(), e.end()), c);
        return s;
    }

    const std::shared_ptr<const VariableLayout>& layout() const { return layout_; }
    const RationalVector& base() const { return base_; }
    const Terms& terms() const { return terms_; }
    std::optional<int> depth() const { return depth_; }
    bool exact() const { return !depth_.has_value(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void set_depth(std::optional<int> d)
    {
        depth_ = d;
        if (d) drop_beyond(*d);
    }

    int drop(const Key& k) const
    {
        int d = 0;
        for (int t = 0; t < layout_->size(); ++t)
            if (!layout_->simple[t]) d += k[t] * layout_->height[t];
        return d;
    }

    Rational exponent(const Key& k, int t) const { return base_[t] + k[t]; }

    RationalVector exponents(const Key& k) const
    {
        RationalVector e(k.size());
        for (std::size_t t = 0; t < k.size(); ++t) e[t] = base_[t] + k[t];
        return e;
    }

    void add(const Key& k, const Rational& c)
    {
        if (c == 0) return;
        if (depth_ && drop(k) > *depth_) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Series& operator+=(const Series& o) { return accumulate(o, Rational(1)); }
    Series& operator-=(const Series& o) { return accumulate(o, Rational(-1)); }
    Series& operator*=(const Rational& s)
    {
        if (s == 0)
            terms_.clear();
        else
            for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& s) { return a *= s; }

    /// Multiplies by x_t^c; c must be natural unless t is simple.
    Series times_power(int t, const Rational& c) const
    {
        if (!layout_->simple[t] && !is_natural(c))
            throw std::invalid_argument("non-natural power of a non-simple variable");
        Series out(layout_, depth_);
        out.base_ = base_;
        Rational nb = base_[t] + c;
        Rational fl = floor_of(nb);
        out.base_[t] = nb - fl;
        int shift = static_cast<int>(to_long(fl));
        for (const auto& [k, v] : terms_) {
            Key nk = k;
            nk[t] += shift;
            out.add(nk, v);
        }
        return out;
    }

    /// Exact equality of all stored data.
    bool operator==(const Series& o) const
    {
        return base_ == o.base_ && terms_ == o.terms_ && depth_ == o.depth_;
    }

    /// Equality of the coefficients both series certify.
    bool agrees_with(const Series& o) const
    {
        std::optional<int> d = min_depth(depth_, o.depth_);
        Series diff = *this;
        diff.depth_ = std::nullopt;
        diff.accumulate(o, Rational(-1), true);
        for (const auto& [k, c] : diff.terms_)
            if (!d || diff.drop(k) <= *d) return false;
        return true;
    }

    /// The terms of drop ≤ d.
    Series truncated(int d) const
    {
        Series out = *this;
        out.depth_ = depth_ ? std::min(*depth_, d) : d;
        out.drop_beyond(*out.depth_);
        return out;
    }

    /// Total degree Σ e_t of a term.
    Rational degree(const Key& k) const
    {
        Rational d(0);
        for (int t = 0; t < layout_->size(); ++t) d += base_[t] + k[t];
        return d;
    }

    /// Sum of the terms of maximal degree.
    Series leading_term() const
    {
        if (terms_.empty()) throw std::invalid_argument("leading term of zero");
        Rational best = degree(terms_.begin()->first);
        for (const auto& [k, c] : terms_) best = std::max(best, degree(k));
        Series out(layout_, depth_);
        out.base_ = base_;
        for (const auto& [k, c] : terms_)
            if (degree(k) == best) out.terms_.emplace(k, c);
        return out;
    }

    /// Whether every stored exponent is a natural number.
    bool is_polynomial() const
    {
        for (const auto& [k, c] : terms_)
            for (int t = 0; t < layout_->size(); ++t)
                if (!is_natural(base_[t] + k[t])) return false;
        return true;
    }

    /// The polynomial formed by the stored terms (requires is_polynomial()).
    Polynomial to_polynomial() const
    {
        Polynomial p;
        for (const auto& [k, c] : terms_) {
            Exponents e(k.size());
            for (std::size_t t = 0; t < k.size(); ++t) {
                Rational v = base_[t] + k[t];
                if (!is_natural(v)) throw std::invalid_argument("series is not a polynomial");
                e[t] = static_cast<int>(to_long(v));
            }
            p.emplace(std::move(e), c);
        }
        return p;
    }

    /// Canonical text: one term per line in key order.
    std::string str() const
    {
        std::string out;
        if (depth_)
            out += "# depth " + std::to_string(*depth_) + "\n";
        else
            out += "# exact\n";
        for (const auto& [k, c] : terms_) {
            out += to_string(c);
            for (int t = 0; t < layout_->size(); ++t) {
                Rational e = base_[t] + k[t];
                if (e == 0) continue;
                out += " x" + std::to_string(t + 1);
                if (e != 1) out += "^" + (is_integer(e) && sgn(e) >= 0 ? to_string(e) : "(" + to_string(e) + ")");
            }
            out += "\n";
        }
        return out;
    }

    static std::optional<int> min_depth(std::optional<int> a, std::optional<int> b)
    {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    static Rational floor_of(const Rational& r)
    {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        return Rational(q);
    }

private:
    void drop_beyond(int d)
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            if (drop(it->first) > d)
                it = terms_.erase(it);
            else
                ++it;
    }

    Series& accumulate(const Series& o, const Rational& s, bool keep_depth = false)
    {
        if (o.terms_.empty()) {
            if (!keep_depth) {
                depth_ = min_depth(depth_, o.depth_);
                if (depth_) drop_beyond(*depth_);
            }
            return *this;
        }
        if (terms_.empty() && base_ != o.base_) base_ = o.base_;
        std::vector<int> shift(base_.size(), 0);
        for (std::size_t t = 0; t < base_.size(); ++t) {
            Rational d = o.base_[t] - base_[t];
            if (!is_integer(d)) throw std::invalid_argument("adding series of different exponent classes");
            shift[t] = static_cast<int>(to_long(d));
        }
        if (!keep_depth) depth_ = min_depth(depth_, o.depth_);
        for (const auto& [k, c] : o.terms_) {
            Key nk = k;
            for (std::size_t t = 0; t < nk.size(); ++t) nk[t] += shift[t];
            add(nk, s * c);
        }
        if (depth_) drop_beyond(*depth_);
        return *this;
    }

    std::shared_ptr<const VariableLayout> layout_;
    RationalVector base_;
    Terms terms_;
    std::optional<int> depth_;
};

/// Largest ht_ns(b) − ht_ns(a) over the terms of D: the loss of certified
/// depth caused by applying D.
inline int depth_cost(const DiffOp& d, const VariableLayout& layout)
{
    int worst = std::numeric_limits<int>::min();
    for (const auto& [t, c] : d.terms()) {
        int k = 0;
        for (int i = 0; i < layout.size(); ++i)
            if (!layout.simple[i]) k += (t.b[i] - t.a[i]) * layout.height[i];
        worst = std::max(worst, k);
    }
    return worst;
}

/// D(f) with exact depth accounting. Throws DepthExhausted when the
/// certified depth would become negative.
inline Series act(const DiffOp& d, const Series& f)
{
    const VariableLayout& layout = *f.layout();
    std::optional<int> nd;
    if (f.depth() && !d.is_zero()) {
        nd = *f.depth() - depth_cost(d, layout);
        if (*nd < 0) throw DepthExhausted("operator application exhausts the certified depth");
    }
    Series res = Series::monomial(f.layout(), f.base(), Rational(0));
    res.set_depth(nd);
    const int m = layout.size();
    std::vector<Rational> e(m);
    for (const auto& [t, c] : d.terms())
        for (const auto& [k, v] : f.terms()) {
            Rational coef = c * v;
            Series::Key nk = k;
            for (int i = 0; i < m && coef != 0; ++i) {
                if (t.b[i] == 0) continue;
                coef *= falling_factorial(f.base()[i] + k[i], t.b[i]);
            }
            if (coef == 0) continue;
            for (int i = 0; i < m; ++i) nk[i] += t.a[i] - t.b[i];
            res.add(nk, coef);
        }
    return res;
}

/// Common weight of all terms: λ − Σ_t e_t β_t.
inline std::optional<Weight> weight_of(const Series& f, const RootSystem& rs, const Weight& lambda)
{
    if (f.is_zero()) return std::nullopt;
    std::optional<Weight> w;
    const VariableLayout& layout = *f.layout();
    for (const auto& [k, c] : f.terms()) {
        Weight cur = lambda;
        for (int t = 0; t < layout.size(); ++t) {
            Rational e = f.exponent(k, t);
            if (e == 0) continue;
            Weight b = root_weight(rs, layout.root[t]);
            for (int i = 0; i < rs.rank(); ++i) cur.coords[i] -= e * b.coords[i];
        }
        if (!w)
            w = cur;
        else if (!(*w == cur))
            return std::nullopt;
    }
    return w;
}

}  // namespace verma

#endif  // VERMA_SERIES_HPP
