#ifndef VERMA_DIFFOP_HPP
#define VERMA_DIFFOP_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "verma/rational.hpp"

namespace verma {

using Exponents = std::vector<int>;

/// One normal-ordered monomial x^a ∂^b.
struct OpMonomial {
    Exponents a;
    Exponents b;

    auto operator<=>(const OpMonomial&) const = default;
    bool operator==(const OpMonomial&) const = default;

    int degree() const
    {
        int d = 0;
        for (int v : a) d += v;
        for (int v : b) d -= v;
        return d;
    }
};

/// Element of the Weyl algebra A on variables x_1..x_m: a finite sum of
/// normal-ordered terms c x^a ∂^b.
class DiffOp {
public:
    using Terms = std::map<OpMonomial, Rational>;

    DiffOp() = default;
    explicit DiffOp(int vars) : vars_(vars) {}

    static DiffOp constant(int vars, const Rational& c)
    {
        DiffOp d(vars);
        d.add_term(Exponents(vars, 0), Exponents(vars, 0), c);
        return d;
    }
    static DiffOp x(int vars, int i, int power = 1)
    {
        DiffOp d(vars);
        Exponents a(vars, 0);
        a[i] = power;
        d.add_term(a, Exponents(vars, 0), Rational(1));
        return d;
    }
    static DiffOp partial(int vars, int i, int power = 1)
    {
        DiffOp d(vars);
        Exponents b(vars, 0);
        b[i] = power;
        d.add_term(Exponents(vars, 0), b, Rational(1));
        return d;
    }

    int vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& a, const Exponents& b, const Rational& c)
    {
        if (c == 0) return;
        OpMonomial key{a, b};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    DiffOp& operator+=(const DiffOp& o)
    {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k.a, k.b, c);
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o)
    {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k.a, k.b, -c);
        return *this;
    }
    DiffOp& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const Rational& s) { return a *= s; }
    friend DiffOp operator*(const Rational& s, DiffOp a) { return a *= s; }
    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }

    /// Largest |a| − |b| over the terms (the filtration degree).
    int filtration_degree() const
    {
        int d = std::numeric_limits<int>::min();
        for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
        return d;
    }

    /// Canonical text, terms in map order, variables named x1..xm and d1..dm.
    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            std::string mono;
            auto factor = [&](char sym, int i, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += sym + std::to_string(i + 1);
                if (e > 1) mono += "^" + std::to_string(e);
            };
            for (int i = 0; i < vars_; ++i) factor('x', i, k.a[i]);
            for (int i = 0; i < vars_; ++i) factor('d', i, k.b[i]);
            bool neg = sgn(c) < 0;
            Rational mag = abs(c);
            std::string body;
            if (mono.empty())
                body = to_string(mag);
            else if (mag == 1)
                body = mono;
            else
                body = to_string(mag) + "*" + mono;
            if (out.empty())
                out = (neg ? "-" : "") + body;
            else
                out += (neg ? " - " : " + ") + body;
        }
        return out;
    }

private:
    void check(const DiffOp& o) const
    {
        if (o.vars_ != vars_ && !o.terms_.empty() && !terms_.empty())
            throw std::invalid_argument("operators on different variable sets");
    }
    friend DiffOp compose(const DiffOp&, const DiffOp&);

    int vars_ = 0;
    Terms terms_;
};

/// The normal-ordered product D1 D2, from ∂^b x^c = Σ_k Π_i C(b_i,k_i) ⟨c_i⟩_{k_i} x^{c−k} ∂^{b−k}.
inline DiffOp compose(const DiffOp& d1, const DiffOp& d2)
{
    const int m = std::max(d1.vars(), d2.vars());
    DiffOp out(m);
    if (d1.is_zero() || d2.is_zero()) return out;
    std::vector<int> kmax(m), k(m);
    Exponents a(m), b(m);
    for (const auto& [t1, c1] : d1.terms())
        for (const auto& [t2, c2] : d2.terms()) {
            for (int i = 0; i < m; ++i) kmax[i] = std::min(t1.b[i], t2.a[i]);
            std::fill(k.begin(), k.end(), 0);
            while (true) {
                Rational c = c1 * c2;
                for (int i = 0; i < m; ++i) {
                    if (k[i] == 0) continue;
                    c *= binomial(t1.b[i], k[i]) * falling_factorial(Rational(t2.a[i]), k[i]);
                }
                for (int i = 0; i < m; ++i) {
                    a[i] = t1.a[i] + t2.a[i] - k[i];
                    b[i] = t1.b[i] + t2.b[i] - k[i];
                }
                out.add_term(a, b, c);
                int i = 0;
                while (i < m && k[i] == kmax[i]) k[i++] = 0;
                if (i == m) break;
                ++k[i];
            }
        }
    return out;
}

inline DiffOp operator*(const DiffOp& a, const DiffOp& b) { return compose(a, b); }

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

/// A polynomial in x_1..x_m with rational coefficients.
using Polynomial = std::map<Exponents, Rational>;

inline void add_to(Polynomial& p, const Exponents& e, const Rational& c)
{
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

/// Exact action of D on a polynomial.
inline Polynomial act(const DiffOp& d, const Polynomial& f)
{
    Polynomial out;
    for (const auto& [t, c] : d.terms())
        for (const auto& [e, v] : f) {
            Rational coef = c * v;
            Exponents ne = e;
            bool zero = false;
            for (std::size_t i = 0; i < ne.size() && !zero; ++i) {
                if (t.b[i] == 0) continue;
                if (ne[i] < t.b[i]) {
                    zero = true;
                    break;
                }
                coef *= falling_factorial(Rational(ne[i]), t.b[i]);
                ne[i] -= t.b[i];
            }
            if (zero) continue;
            for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += t.a[i];
            add_to(out, ne, coef);
        }
    return out;
}

}  // namespace verma

#endif  // VERMA_DIFFOP_HPP
