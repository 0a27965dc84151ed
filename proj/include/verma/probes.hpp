#ifndef VERMA_PROBES_HPP
#define VERMA_PROBES_HPP

#include <functional>
#include <random>
#include <vector>

#include "verma/root_system.hpp"
#include "verma/series.hpp"

namespace verma {

/// All natural exponent vectors e with Σ_t e_t β_t = target (simple coordinates).
inline std::vector<Exponents> exponents_of_weight(const RootSystem& rs, const VariableLayout& layout, const RootCoords& target,
                                                  std::size_t limit = 100000)
{
    std::vector<Exponents> out;
    Exponents e(layout.size(), 0);
    RootCoords rest = target;
    std::function<void(int)> rec = [&](int t) {
        if (out.size() >= limit) return;
        if (t == layout.size()) {
            for (int v : rest)
                if (v) return;
            out.push_back(e);
            return;
        }
        const auto& b = rs.positive_coords(layout.root[t]);
        int k = 0;
        while (true) {
            rec(t + 1);
            bool fits = true;
            for (int i = 0; i < rs.rank(); ++i)
                if (b[i] > rest[i]) fits = false;
            if (!fits) break;
            for (int i = 0; i < rs.rank(); ++i) rest[i] -= b[i];
            e[t] = ++k;
        }
        for (int i = 0; i < rs.rank(); ++i) rest[i] += k * b[i];
        e[t] = 0;
    };
    rec(0);
    return out;
}

/// A random weight vector of 𝒜₁: a weighted polynomial of small height,
/// optionally multiplied by random fractional powers of the simple variables.
inline Series random_weighted_series(const RootSystem& rs, const std::shared_ptr<const VariableLayout>& layout, std::mt19937_64& rng,
                                     int max_height = 4, bool fractional = true)
{
    std::uniform_int_distribution<int> coef(-6, 6), den(2, 7), part(0, max_height);
    RootCoords target(rs.rank(), 0);
    int h = part(rng);
    std::uniform_int_distribution<int> pick(0, rs.num_positive() - 1);
    while (h > 0) {
        int r = pick(rng);
        if (rs.height(r) > h) continue;
        const auto& b = rs.positive_coords(r);
        for (int i = 0; i < rs.rank(); ++i) target[i] += b[i];
        h -= rs.height(r);
    }
    auto all = exponents_of_weight(rs, *layout, target, 200);
    RationalVector shift(layout->size(), Rational(0));
    if (fractional)
        for (int t = 0; t < layout->size(); ++t)
            if (layout->simple[t]) {
                shift[t] = Rational(coef(rng), den(rng));
                shift[t].canonicalize();
            }
    auto term = [&](const Exponents& e, int c) {
        RationalVector x = shift;
        for (int t = 0; t < layout->size(); ++t) x[t] += e[t];
        return Series::monomial(layout, x, Rational(c));
    };
    std::uniform_int_distribution<int> keep(0, 2);
    Series out = term(all.front(), 1);
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (keep(rng) == 0) continue;
        int c = coef(rng);
        out += term(all[i], c == 0 ? 1 : c);
    }
    return out;
}

/// A random rational with small numerator and denominator in [2, 7].
inline Rational random_rational(std::mt19937_64& rng, int range = 9)
{
    std::uniform_int_distribution<int> num(-range, range), den(2, 7);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace verma

#endif  // VERMA_PROBES_HPP
