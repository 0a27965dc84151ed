#ifndef VERMA_POSET_RANK_HPP
#define VERMA_POSET_RANK_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "verma/chevalley.hpp"
#include "verma/linalg.hpp"
#include "verma/parallel.hpp"
#include "verma/root_system.hpp"

namespace verma {

/// Positive roots of height i, in id order.
inline std::vector<int> layer_roots(const RootSystem& rs, int i)
{
    std::vector<int> out;
    for (int r = 0; r < rs.num_positive(); ++r)
        if (rs.height(r) == i) out.push_back(r);
    return out;
}

/// a_{β,γ} = N_{β,-γ} if γ - β ∈ Φ⁺, else 0.
inline int poset_entry(const RootSystem& rs, const StructureConstants& N, int beta, int gamma)
{
    auto d = rs.difference(gamma, beta);
    if (!d || !rs.is_positive(*d)) return 0;
    return N(beta, rs.negate(gamma));
}

/// A(Φ): rows are all positive roots, columns the non-simple ones, both in id order.
inline IntegerMatrix matrix_A(const RootSystem& rs, const StructureConstants& N)
{
    const int m = rs.num_positive(), n = rs.rank();
    IntegerMatrix A(m, m - n);
    for (int b = 0; b < m; ++b)
        for (int g = n; g < m; ++g) A(b, g - n) = poset_entry(rs, N, b, g);
    return A;
}

/// The bigraph G(U, V) with U ⊆ Φ_i and V ⊆ Φ_{i+1}.
struct RootBigraph {
    int layer = 0;
    std::vector<int> U, V;

    bool adjacent(const RootSystem& rs, int beta, int gamma) const
    {
        auto d = rs.difference(gamma, beta);
        return d && rs.is_positive(*d);
    }

    std::vector<std::pair<int, int>> edges(const RootSystem& rs) const
    {
        std::vector<std::pair<int, int>> out;
        for (int b : U)
            for (int g : V)
                if (adjacent(rs, b, g)) out.push_back({b, g});
        return out;
    }

    IntegerMatrix matrix(const StructureConstants& N) const
    {
        IntegerMatrix A(U.size(), V.size());
        for (std::size_t r = 0; r < U.size(); ++r)
            for (std::size_t c = 0; c < V.size(); ++c) A(r, c) = poset_entry(N.roots(), N, U[r], V[c]);
        return A;
    }

    /// The subgraph without isolated vertices.
    RootBigraph core(const RootSystem& rs) const
    {
        RootBigraph out{layer, {}, {}};
        for (int b : U)
            if (std::any_of(V.begin(), V.end(), [&](int g) { return adjacent(rs, b, g); })) out.U.push_back(b);
        for (int g : V)
            if (std::any_of(U.begin(), U.end(), [&](int b) { return adjacent(rs, b, g); })) out.V.push_back(g);
        return out;
    }
};

inline RootBigraph build_bigraph(const RootSystem& rs, int i)
{
    if (i < 1 || i >= rs.max_height()) throw std::invalid_argument("layer out of range");
    return RootBigraph{i, layer_roots(rs, i), layer_roots(rs, i + 1)};
}

/// First hanging edge in scan order (U outer, V inner).
inline std::optional<std::pair<int, int>> find_hanging(const RootSystem& rs, const RootBigraph& g)
{
    for (int b : g.U)
        for (int c : g.V) {
            if (!g.adjacent(rs, b, c)) continue;
            int up = 0, down = 0;
            for (int x : g.V) up += g.adjacent(rs, b, x);
            for (int y : g.U) down += g.adjacent(rs, y, c);
            if (up == 1 || down == 1) return std::make_pair(b, c);
        }
    return std::nullopt;
}

struct PruneStep {
    int beta, gamma;
    std::size_t rank_before, rank_after;
    std::size_t cols_before;
    /// rank = |V| before iff rank = |V|-1 after, and the rank drops by exactly one.
    bool lemma_holds() const
    {
        return ((rank_before == cols_before) == (rank_after + 1 == cols_before)) && rank_before == rank_after + 1;
    }
};

struct PruneResult {
    RootBigraph central;
    std::vector<PruneStep> steps;

    bool lemma_holds() const
    {
        return std::all_of(steps.begin(), steps.end(), [](const PruneStep& s) { return s.lemma_holds(); });
    }
};

inline void remove_edge(RootBigraph& g, int beta, int gamma)
{
    g.U.erase(std::find(g.U.begin(), g.U.end(), beta));
    g.V.erase(std::find(g.V.begin(), g.V.end(), gamma));
}

/// Removes hanging edges until none remain, recording the rank on both sides of each step.
inline PruneResult prune_certified(const StructureConstants& N, RootBigraph g)
{
    const RootSystem& rs = N.roots();
    PruneResult res;
    std::size_t rank = bareiss_rank(g.matrix(N));
    while (auto e = find_hanging(rs, g)) {
        PruneStep step{e->first, e->second, rank, 0, g.V.size()};
        remove_edge(g, e->first, e->second);
        rank = bareiss_rank(g.matrix(N));
        step.rank_after = rank;
        res.steps.push_back(step);
    }
    res.central = std::move(g);
    return res;
}

inline RootBigraph prune_hanging(const RootSystem& rs, RootBigraph g)
{
    while (auto e = find_hanging(rs, g)) remove_edge(g, e->first, e->second);
    return g;
}

/// For a 6-cycle core β_j ≁ γ_j: det A and 2 N_{β1,-γ2} N_{β2,-γ3} N_{β3,-γ1}.
struct CycleCheck {
    Integer det, formula;
};

inline std::optional<CycleCheck> three_cycle_check(const StructureConstants& N, const RootBigraph& core)
{
    const RootSystem& rs = N.roots();
    if (core.U.size() != 3 || core.V.size() != 3) return std::nullopt;
    std::vector<int> gamma(3, -1);
    for (int r = 0; r < 3; ++r) {
        int zeros = 0;
        for (int c = 0; c < 3; ++c)
            if (!core.adjacent(rs, core.U[r], core.V[c])) {
                ++zeros;
                gamma[r] = core.V[c];
            }
        if (zeros != 1) return std::nullopt;
    }
    if (std::set<int>(gamma.begin(), gamma.end()).size() != 3) return std::nullopt;
    RootBigraph g{core.layer, core.U, gamma};
    auto a = [&](int r, int c) { return Integer(poset_entry(rs, N, core.U[r], gamma[c])); };
    return CycleCheck{determinant(g.matrix(N)), 2 * a(0, 1) * a(1, 2) * a(2, 0)};
}

/// Whether the mod-2 reduction of A equals `pattern` up to row and column permutations.
inline bool equivalent_mod2(const IntegerMatrix& A, const std::vector<std::vector<int>>& pattern)
{
    const std::size_t n = pattern.size();
    if (A.rows() != n || (n && A.cols() != pattern[0].size())) return false;
    const std::size_t m = n ? pattern[0].size() : 0;
    auto columns = [&](auto entry, const std::vector<std::size_t>& rows) {
        std::vector<std::vector<int>> cols(m, std::vector<int>(n));
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t r = 0; r < n; ++r) cols[c][r] = entry(rows[r], c);
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    auto target = columns([&](std::size_t r, std::size_t c) { return pattern[r][c] & 1; }, id);
    std::vector<std::size_t> perm = id;
    do {
        if (columns([&](std::size_t r, std::size_t c) { return mpz_odd_p(A(r, c).get_mpz_t()) ? 1 : 0; }, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

struct LayerReport {
    int layer = 0;
    std::size_t rows = 0, cols = 0, rank = 0;
    bool full = false;
    PruneResult pruning;
    RootBigraph core;                  // central graph without isolated vertices
    std::optional<int> parity;         // det mod 2 of a square nonempty core
    std::optional<Integer> determinant;
    std::optional<CycleCheck> cycle;
};

struct RankReport {
    std::string type;
    int m = 0, n = 0;
    std::size_t rank = 0;
    bool full = false;
    std::vector<LayerReport> layers;

    bool layers_full() const
    {
        return std::all_of(layers.begin(), layers.end(), [](const LayerReport& l) { return l.full; });
    }
    bool lemma_holds() const
    {
        return std::all_of(layers.begin(), layers.end(), [](const LayerReport& l) { return l.pruning.lemma_holds(); });
    }
};

inline LayerReport certify_layer(const StructureConstants& N, int i)
{
    const RootSystem& rs = N.roots();
    LayerReport rep;
    rep.layer = i;
    RootBigraph g = build_bigraph(rs, i);
    IntegerMatrix A = g.matrix(N);
    rep.rows = A.rows();
    rep.cols = A.cols();
    rep.rank = bareiss_rank(A);
    rep.full = rep.rank == rep.cols;
    rep.pruning = prune_certified(N, g);
    rep.core = rep.pruning.central.core(rs);
    if (!rep.core.U.empty() && rep.core.U.size() == rep.core.V.size()) {
        IntegerMatrix C = rep.core.matrix(N);
        rep.parity = determinant_mod2(C);
        rep.determinant = determinant(C);
    }
    rep.cycle = three_cycle_check(N, rep.core);
    return rep;
}

/// Exact rank of A(Φ) and of every A_i(Φ), with the pruning data per layer.
/// `layer` restricts the per-layer work to one i.
inline RankReport rank_certify(const StructureConstants& N, std::optional<int> layer = std::nullopt)
{
    const RootSystem& rs = N.roots();
    RankReport rep;
    rep.type = rs.name();
    rep.m = rs.num_positive();
    rep.n = rs.rank();
    rep.rank = bareiss_rank(matrix_A(rs, N));
    rep.full = static_cast<int>(rep.rank) == rep.m - rep.n;
    std::vector<int> which;
    if (layer) which.push_back(*layer);
    else
        for (int i = 1; i < rs.max_height(); ++i) which.push_back(i);
    rep.layers.resize(which.size());
    parallel_for(which.size(), [&](std::size_t k) { rep.layers[k] = certify_layer(N, which[k]); });
    return rep;
}

/// Hasse diagram of the root poset as a DOT digraph; edges β → β + α_i are labeled i.
inline std::string export_hasse(const RootSystem& rs)
{
    std::ostringstream out;
    out << "digraph \"" << rs.name() << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int r = 0; r < rs.num_positive(); ++r) {
        out << "  r" << r << " [label=\"" << rs.ambient_label(r) << "\\n(";
        const auto& c = rs.positive_coords(r);
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
        out << ") ht " << rs.height(r) << "\"];\n";
    }
    for (int r = 0; r < rs.num_positive(); ++r)
        for (int a = 0; a < rs.rank(); ++a)
            if (auto s = rs.sum(r, a)) out << "  r" << r << " -> r" << *s << " [label=\"" << a + 1 << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace verma

#endif  // VERMA_POSET_RANK_HPP
