#ifndef VERMA_ACCEPTANCE_HPP
#define VERMA_ACCEPTANCE_HPP

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "verma/oracle.hpp"
#include "verma/poset_rank.hpp"
#include "verma/singular.hpp"
#include "verma/sp_formula.hpp"
#include "verma/weyl_rep.hpp"

namespace verma {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceConfig {
    unsigned long seed = 20240601;
    int core_rank = 4;   // criteria 1-2
    int probe_rank = 3;  // criteria 3-4
    int poset_rank = 8;  // criterion 10
};

using TypeList = std::vector<std::pair<char, int>>;

/// Every simple type (with the usual rank minimums) of rank ≤ r.
inline TypeList simple_types(int r)
{
    TypeList out;
    for (int n = 1; n <= r; ++n) out.push_back({'A', n});
    for (int n = 2; n <= r; ++n) out.push_back({'B', n});
    for (int n = 2; n <= r; ++n) out.push_back({'C', n});
    for (int n = 4; n <= r; ++n) out.push_back({'D', n});
    for (int n = 6; n <= std::min(r, 8); ++n) out.push_back({'E', n});
    if (r >= 4) out.push_back({'F', 4});
    if (r >= 2) out.push_back({'G', 2});
    return out;
}

inline Weight random_weight(const RootSystem& rs, std::mt19937_64& rng)
{
    Weight w = zero_weight(rs);
    for (auto& c : w.coords) c = random_rational(rng);
    return w;
}

namespace detail {

// Collects failures; the first few are kept for the report.
class Tally {
public:
    void check(bool ok, const std::function<std::string()>& what)
    {
        ++total_;
        if (ok) return;
        if (failed_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what();
    }
    bool ok() const { return failed_ == 0; }
    std::string summary(const std::string& unit) const
    {
        std::ostringstream out;
        out << total_ - failed_ << "/" << total_ << " " << unit;
        if (failed_) out << " (" << notes_ << ")";
        return out.str();
    }

private:
    std::size_t total_ = 0, failed_ = 0;
    std::string notes_;
};

}  // namespace detail

inline CriterionResult criterion_good_ordering(const AcceptanceConfig& cfg)
{
    detail::Tally t;
    for (auto [c, n] : simple_types(std::max(cfg.core_rank, 2))) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        t.check(verify_good_ordering(EtaTable(rs, N, lex_ordering(rs))), [&] { return rs.name(); });
    }
    return {1, "good ordering", t.ok(), t.summary("types")};
}

inline CriterionResult criterion_operator_shape(const AcceptanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed + 2);
    detail::Tally t;
    for (auto [c, n] : simple_types(cfg.core_rank)) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        LieOps ops(rs, N, lex_ordering(rs), random_weight(rs, rng));
        for (int b = 0; b < rs.num_positive(); ++b) {
            t.check(eta_shape_ok(ops.eta_table(), b), [&] { return rs.name() + " eta " + rs.ambient_label(b); });
            t.check(d_shape_ok(ops, b), [&] { return rs.name() + " d " + rs.ambient_label(b); });
        }
    }
    return {2, "operator shape", t.ok(), t.summary("roots")};
}

inline CriterionResult criterion_master_equivalence(const AcceptanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed + 3);
    detail::Tally t;
    for (auto [c, n] : simple_types(cfg.probe_rank)) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        Ordering ord = lex_ordering(rs);
        Weight lam = random_weight(rs, rng);
        LieOps ops(rs, N, ord, lam);
        PBWModule M(rs, N, ord, lam);
        for (int k = 0; k < 200; ++k) {
            FreeLieWord u = random_word(rs, rng);
            Polynomial f = random_polynomial(ord.size(), rng);
            t.check(tau_apply_check(u, f, ops, M), [&] { return rs.name() + " probe " + std::to_string(k); });
        }
    }
    return {3, "master equivalence", t.ok(), t.summary("probes")};
}

inline CriterionResult criterion_commutator_laws(const AcceptanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed + 4);
    detail::Tally t;
    const int depth = 6;
    for (auto [c, n] : simple_types(cfg.probe_rank)) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        LieOps ops(rs, N, lex_ordering(rs), random_weight(rs, rng));
        WeylAction W(ops, depth);
        for (int a = 0; a < n; ++a) {
            std::vector<Series> probes;
            for (int k = 0; k < 5; ++k) probes.push_back(random_weighted_series(rs, ops.layout(), rng, 4, false).truncated(depth));
            for (int k = 0; k < 10; ++k) {
                Rational cc = random_rational(rng);
                for (const Series& g : probes)
                    for (int b = 0; b < n; ++b) {
                        Series lhs = act(ops.d(b), W.eta_power(a, cc, g)) - W.eta_power(a, cc, act(ops.d(b), g));
                        Series rhs(ops.layout(), g.depth());
                        if (a == b) rhs = W.eta_power(a, cc - 1, g * (1 - cc) + act(ops.zeta(a), g)) * cc;
                        t.check(lhs.agrees_with(rhs), [&] { return rs.name() + " [d,eta^c]"; });
                        Series zl = act(ops.zeta(b), W.eta_power(a, cc, g)) - W.eta_power(a, cc, act(ops.zeta(b), g));
                        Series zr = W.eta_power(a, cc, g) * (-cc * rs.pairing(a, b));
                        t.check(zl.agrees_with(zr), [&] { return rs.name() + " [zeta,eta^c]"; });
                    }
            }
        }
    }
    return {4, "commutator laws", t.ok(), t.summary("identities")};
}

inline CriterionResult criterion_weyl_representation(const AcceptanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed + 5);
    detail::Tally t;
    const int depth = 12;
    std::vector<int> seen_m;
    for (auto [c, n] : TypeList{{'A', 3}, {'B', 2}, {'C', 2}, {'G', 2}}) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        LieOps ops(rs, N, lex_ordering(rs), random_weight(rs, rng));
        WeylAction W(ops, depth);
        std::vector<Series> probes{W.one()};
        for (int k = 0; k < 2; ++k) probes.push_back(random_weighted_series(rs, ops.layout(), rng, 3).truncated(depth));
        for (int a = 0; a < n; ++a)
            for (const Series& g : probes)
                t.check(W.simple_reflect(a, W.simple_reflect(a, g)).agrees_with(g), [&] { return rs.name() + " involution"; });
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || rs.norm2(a) > rs.norm2(b) || (rs.norm2(a) == rs.norm2(b) && a > b)) continue;
                int prod = rs.pairing(a, b) * rs.pairing(b, a);
                seen_m.push_back(prod == 0 ? 2 : prod + 2 + (prod == 3));
                for (int k = 0; k < 10; ++k) {
                    Rational c1 = random_rational(rng), c2 = random_rational(rng);
                    const Series& probe = probes[k % probes.size()];
                    t.check(W.verify_braid(a, b, c1, c2, probe), [&] { return rs.name() + " braid " + std::to_string(a) + std::to_string(b); });
                }
            }
    }
    for (int m : {2, 3, 4, 6}) t.check(std::count(seen_m.begin(), seen_m.end(), m) > 0, [&] { return "m=" + std::to_string(m) + " not covered"; });
    return {5, "Weyl representation", t.ok(), t.summary("checks")};
}

inline CriterionResult criterion_solution_space(const AcceptanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed + 6);
    detail::Tally t;
    const int depth = 6;
    for (auto [c, n] : TypeList{{'A', 2}, {'B', 2}, {'G', 2}}) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        auto group = weyl_group_elements(rs);
        auto etas = std::make_shared<const EtaTable>(rs, N, lex_ordering(rs));
        for (int k = 0; k < 20; ++k) {
            LieOps ops(etas, N, random_weight(rs, rng));
            WeylAction W(ops, depth);
            for (const auto& w : group) {
                Series s = W.apply_word(w, W.one());
                auto mu = weight_of(s, rs, ops.lambda());
                t.check(mu && *mu == dot_action(rs, w, ops.lambda()), [&] { return rs.name() + " weight"; });
                for (int a = 0; a < n; ++a) {
                    Series d = act(ops.d(a), s);
                    t.check(d.is_zero(), [&] { return rs.name() + " d(w(1))"; });
                }
            }
            if (k >= 5) continue;
            Series probe = random_weighted_series(rs, ops.layout(), rng, 4).truncated(depth);
            bool moved = false;
            for (int a = 0; a < n; ++a) moved = moved || !act(ops.d(a), probe).is_zero();
            t.check(moved, [&] { return rs.name() + " non-solution annihilated"; });
        }
    }
    return {6, "solution space", t.ok(), t.summary("checks")};
}

/// Integral, wall, half-integral and generic rational weights; at least 30.
inline std::vector<Weight> linkage_sweep(const RootSystem& rs, std::mt19937_64& rng)
{
    const int n = rs.rank();
    std::vector<Weight> out;
    const int wide = n == 1 ? 4 : 0;
    std::uniform_int_distribution<int> small(-3 - wide, 2 + wide);
    auto integral = [&] {
        Weight w = zero_weight(rs);
        for (auto& c : w.coords) c = small(rng);
        return w;
    };
    out.push_back(zero_weight(rs));
    out.push_back(Weight{RationalVector(n, Rational(-1))});
    for (int tries = 0; out.size() < 18 && tries < 1000; ++tries) {
        Weight w = integral();
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    // ⟨λ+ρ, γ^∨⟩ = 0 for a chosen positive γ.
    for (int k = 0; k < 6; ++k) {
        int g = k % rs.num_positive();
        Weight w = integral();
        Rational s = coroot_pairing(rs, w + rho(rs), g);
        RootCoords cg = rs.coords(g);
        for (int i = 0; i < n; ++i)
            if (cg[i]) {
                Weight e = zero_weight(rs);
                e.coords[i] = 1;
                Rational step = coroot_pairing(rs, e, g);
                w.coords[i] -= s / step;
                break;
            }
        out.push_back(w);
    }
    for (int k = 0; k < 5; ++k) {
        Weight w = integral();
        w.coords[k % n] += Rational(1, 2);
        out.push_back(w);
    }
    for (int k = 0; k < 6; ++k) out.push_back(random_weight(rs, rng));
    return out;
}

/// λ − ν for every ν ∈ ℕΔ with 0 < ht ν ≤ bound.
inline std::vector<Weight> weights_below(const RootSystem& rs, const Weight& lambda, int bound)
{
    std::vector<Weight> out;
    std::vector<int> nu(rs.rank(), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rs.rank()) {
            if (left == bound) return;
            std::vector<Rational> c(nu.begin(), nu.end());
            out.push_back(lambda - combination_weight(rs, c));
            return;
        }
        for (int k = 0; k <= left; ++k) {
            nu[i] = k;
            rec(i + 1, left - k);
        }
        nu[i] = 0;
    };
    rec(0, bound);
    return out;
}

inline CriterionResult criterion_bgg_verma(const AcceptanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed + 7);
    detail::Tally t;
    const int bound = 8;
    std::size_t pairs = 0, linked_pairs = 0;
    for (auto [c, n] : TypeList{{'A', 1}, {'A', 2}, {'B', 2}, {'A', 3}}) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        auto sweep = linkage_sweep(rs, rng);
        t.check(sweep.size() >= 30, [&] { return rs.name() + " sweep too small"; });
        std::vector<std::pair<std::size_t, std::size_t>> counts(sweep.size());
        std::vector<std::size_t> linked_count(sweep.size(), 0);
        std::vector<std::string> errors(sweep.size());
        parallel_for(sweep.size(), [&](std::size_t k) {
            PBWModule M(rs, N, lex_ordering(rs), sweep[k]);
            for (const auto& mu : weights_below(rs, sweep[k], bound)) {
                auto ker = singular_kernel(M, mu);
                bool linked = strongly_linked(rs, sweep[k], mu).has_value();
                ++counts[k].first;
                linked_count[k] += linked;
                if (ker.size() > 1 || ker.empty() == linked) {
                    ++counts[k].second;
                    if (errors[k].empty())
                        errors[k] = rs.name() + " λ=" + join_rationals(sweep[k].coords) + " μ=" + join_rationals(mu.coords);
                }
            }
        });
        for (std::size_t k = 0; k < sweep.size(); ++k) {
            t.check(counts[k].second == 0, [&] { return errors[k]; });
            pairs += counts[k].first;
            linked_pairs += linked_count[k];
        }
    }
    return {7, "BGG-Verma cross-check", t.ok(),
            t.summary("weights") + ", " + std::to_string(pairs) + " pairs (λ, μ), " + std::to_string(linked_pairs) + " linked"};
}

inline CriterionResult criterion_polynomiality(const AcceptanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed + 7);
    detail::Tally t;
    std::size_t runs = 0, polynomial = 0;
    for (auto [c, n] : TypeList{{'A', 1}, {'A', 2}, {'B', 2}, {'A', 3}}) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        auto sweep = linkage_sweep(rs, rng);
        auto group = weyl_group_elements(rs);
        auto etas = std::make_shared<const EtaTable>(rs, N, lex_ordering(rs));
        std::vector<std::string> errors(sweep.size());
        std::vector<std::size_t> poly(sweep.size(), 0);
        parallel_for(sweep.size(), [&](std::size_t k) {
            LieOps ops(etas, N, sweep[k]);
            for (const auto& w : group) {
                try {
                    auto r = solve_singular(ops, w, 2);
                    poly[k] += r.polynomial();
                    if (!r.consistent() || (r.polynomial() && !r.verified)) {
                        if (errors[k].empty()) errors[k] = rs.name() + " λ=" + join_rationals(sweep[k].coords);
                    }
                } catch (const DepthExhausted& e) {
                    if (errors[k].empty()) errors[k] = rs.name() + " undecided: " + e.what();
                }
            }
        });
        for (std::size_t k = 0; k < sweep.size(); ++k) {
            t.check(errors[k].empty(), [&] { return errors[k]; });
            runs += group.size();
            polynomial += poly[k];
        }
    }
    return {8, "polynomiality", t.ok(),
            t.summary("weights") + ", " + std::to_string(runs) + " (λ, w), " + std::to_string(polynomial) + " polynomial"};
}

inline CriterionResult criterion_sp_formula(const AcceptanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed + 9);
    detail::Tally t;
    for (int n : {2, 3}) {
        SpContext ctx(n);
        for (int k = 1; k <= 3; ++k) {
            Weight lam = zero_weight(ctx.roots());
            Rational rest(0);
            for (int i = 0; i + 1 < n; ++i) {
                lam.coords[i] = random_rational(rng);
                rest += lam.coords[i] + 1;
            }
            lam.coords[n - 1] = (k - rest) / 2 - 1;
            std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            LieOps ops(ctx.roots(), ctx.constants(), ctx.ordering(), lam);
            PBWVector closed = sp_formula(ctx, lam);
            PBWVector v = sp_to_chevalley(ctx, closed);
            t.check(verify_singular(v, ops), [&] { return tag + " not singular"; });
            auto r = solve_singular_root(ops, ctx.top_root(), 0);
            t.check(r.polynomial() && v.proportional_to(*r.vector), [&] { return tag + " differs from w(1)"; });
            if (n != 2) continue;
            // Shifted labels l_i = λ_i + 1.
            Rational l1 = lam.coords[0] + 1, l2 = lam.coords[1] + 1;
            std::size_t count = 0;
            bool match = true;
            for (int p = 0; 2 * p <= k; ++p)
                for (int q = 0; 2 * p + q <= k; ++q) {
                    Exponents a(4, 0);
                    a[ctx.var(2, 1)] = k - 2 * p - q;
                    a[ctx.var(3, 1)] = p;
                    a[ctx.var(4, 1)] = q;
                    a[ctx.var(4, 2)] = k - p - q;
                    Rational want = falling_factorial(l1 + l2, p + q) * falling_factorial(l1 + 2 * l2, 2 * p + q) /
                                    Rational(factorial(p) * factorial(q));
                    Rational got = closed.coeffs.count(a) ? closed.coeffs.at(a) : Rational(0);
                    match = match && got == want;
                    count += want != 0;
                }
            t.check(match && count == closed.coeffs.size(), [&] { return tag + " double sum"; });
        }
    }
    return {9, "sp(2n) closed formula", t.ok(), t.summary("cases")};
}

inline CriterionResult criterion_poset_rank(const AcceptanceConfig& cfg)
{
    detail::Tally t;
    std::size_t cycles = 0;
    for (auto [c, n] : simple_types(cfg.poset_rank)) {
        RootSystem rs(c, n);
        StructureConstants N(rs);
        RankReport rep = rank_certify(N);
        t.check(rep.full && rep.layers_full() && rep.lemma_holds(), [&] { return rs.name() + " rank"; });
        if (c == 'A' || c == 'D' || c == 'E')
            for (const auto& l : rep.layers)
                if (l.cycle) {
                    ++cycles;
                    t.check(l.cycle->det == l.cycle->formula && l.cycle->det != 0, [&] { return rs.name() + " 3-cycle"; });
                }
    }
    t.check(cycles > 0, [] { return std::string("no 3-cycle cores"); });
    if (cfg.poset_rank >= 5) {
        RootSystem rs('D', 5);
        StructureConstants N(rs);
        auto steps = prune_certified(N, build_bigraph(rs, 2)).steps;
        auto b = parse_root(rs, "e1-e3"), g = parse_root(rs, "e1-e4");
        bool found = std::any_of(steps.begin(), steps.end(), [&](const PruneStep& s) { return s.beta == *b && s.gamma == *g; });
        t.check(found, [] { return std::string("D5 hanging edge missing"); });
    }
    if (cfg.poset_rank >= 4) {
        RootSystem rs('F', 4);
        StructureConstants N(rs);
        LayerReport l = certify_layer(N, 3);
        t.check(l.parity && *l.parity == 1 && l.core.V.size() == 3, [] { return std::string("F4 layer 3 determinant not odd"); });
    }
    return {10, "root poset rank", t.ok(), t.summary("checks")};
}

using Criterion = std::function<CriterionResult(const AcceptanceConfig&)>;

inline std::vector<Criterion> all_criteria()
{
    return {criterion_good_ordering,      criterion_operator_shape, criterion_master_equivalence, criterion_commutator_laws,
            criterion_weyl_representation, criterion_solution_space, criterion_bgg_verma,         criterion_polynomiality,
            criterion_sp_formula,         criterion_poset_rank};
}

/// Runs one criterion, turning exceptions into failures.
inline CriterionResult run_criterion(const Criterion& c, int id, const AcceptanceConfig& cfg)
{
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = c(cfg);
    } catch (const std::exception& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string format_line(const CriterionResult& r)
{
    std::ostringstream out;
    out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " [" << r.seconds << "s]";
    return out.str();
}

}  // namespace verma

#endif  // VERMA_ACCEPTANCE_HPP
