// verma: command-line front end.
//
// Every subcommand builds one report, as a JSON document and as plain text;
// --format picks which one is written. Exit codes: 0 success, 1 failed
// verification or exhausted depth, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "verma/verma.hpp"

using json = nlohmann::ordered_json;
using namespace verma;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    json doc;
    std::string text;
    bool ok = true;
};

struct Options {
    std::string type;
    int rank = 0;
    std::string lambda, mu, word, root, dot;
    std::vector<std::string> words;
    bool rho_shifted = false;
    int depth = 12;
    int bound = 8;
    std::optional<int> layer;
    AcceptanceConfig acceptance;
};

RootSystem make_roots(const Options& o)
{
    if (o.type.size() != 1) throw UsageError("--type must be one of A..G");
    try {
        return RootSystem(o.type[0], o.rank);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Weight parse_weight(const RootSystem& rs, const std::string& text, bool shifted, const char* flag)
{
    std::vector<Rational> c;
    try {
        c = parse_rational_list(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (static_cast<int>(c.size()) != rs.rank())
        throw UsageError(std::string(flag) + " needs " + std::to_string(rs.rank()) + " entries");
    if (shifted)
        for (auto& x : c) x -= 1;
    return Weight{c};
}

WeylElement parse_word(const RootSystem& rs, const std::string& text)
{
    WeylElement w;
    if (text.empty() || text == "e") return w;
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) {
        int i = 0;
        try {
            i = std::stoi(tok);
        } catch (...) {
            throw UsageError("bad Weyl word entry '" + tok + "'");
        }
        if (i < 1 || i > rs.rank()) throw UsageError("Weyl word entries are simple-root indices 1.." + std::to_string(rs.rank()));
        w.word.push_back(i - 1);
    }
    return w;
}

json rats(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json word_json(const WeylElement& w)
{
    json out = json::array();
    for (int i : w.word) out.push_back(i + 1);
    return out;
}

std::string word_text(const WeylElement& w)
{
    if (w.word.empty()) return "e";
    std::string out;
    for (int i : w.word) out += "s" + std::to_string(i + 1);
    return out;
}

json root_json(const RootSystem& rs, int id)
{
    json c = json::array();
    for (int x : rs.positive_coords(id)) c.push_back(x);
    return {{"id", id}, {"label", rs.ambient_label(id)}, {"coords", c}, {"height", rs.height(id)}};
}

std::string indent(const std::string& text)
{
    std::string out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
    return out;
}

bool is_sp(const RootSystem& rs) { return rs.type() == 'C'; }

Ordering ordering_for(const RootSystem& rs) { return is_sp(rs) ? sp_ordering(rs) : lex_ordering(rs); }

json variables_json(const RootSystem& rs, const Ordering& ord)
{
    json out = json::array();
    for (int r : ord.order) out.push_back(rs.ambient_label(r));
    return out;
}

std::string monomial_text(const std::vector<std::string>& names, const std::vector<Rational>& e)
{
    std::string out;
    for (std::size_t t = 0; t < e.size(); ++t) {
        if (e[t] == 0) continue;
        if (!out.empty()) out += " ";
        out += names[t];
        if (e[t] != 1) out += "^" + to_string(e[t]);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::string> lowering_names(const RootSystem& rs, const Ordering& ord)
{
    std::vector<std::string> out;
    for (int r : ord.order) out.push_back("E[-(" + rs.ambient_label(r) + ")]");
    return out;
}

json vector_json(const PBWVector& v, const std::vector<std::string>& names)
{
    json terms = json::array();
    for (const auto& [a, c] : v.coeffs) {
        json e = json::array();
        for (int x : a) e.push_back(x);
        std::vector<Rational> ra(a.begin(), a.end());
        terms.push_back({{"exponents", e}, {"coefficient", to_string(c)}, {"monomial", monomial_text(names, ra)}});
    }
    return terms;
}

std::string vector_text(const PBWVector& v, const std::vector<std::string>& names)
{
    std::string out;
    for (const auto& [a, c] : v.coeffs) {
        std::vector<Rational> ra(a.begin(), a.end());
        out += "  " + to_string(c) + " * " + monomial_text(names, ra) + " v\n";
    }
    return out.empty() ? "  0\n" : out;
}

json series_json(const Series& s)
{
    json terms = json::array();
    for (const auto& [k, c] : s.terms()) terms.push_back({{"exponents", rats(s.exponents(k))}, {"coefficient", to_string(c)}});
    json out{{"exact", s.exact()}};
    out["depth"] = s.depth() ? json(*s.depth()) : json(nullptr);
    out["terms"] = terms;
    return out;
}

json chain_json(const RootSystem& rs, const std::optional<LinkageChain>& chain)
{
    if (!chain) return nullptr;
    json steps = json::array();
    for (const auto& s : chain->steps)
        steps.push_back({{"root", rs.ambient_label(s.root)}, {"k", to_string(s.k)}, {"weight", rats(s.weight.coords)}});
    return steps;
}

// --- subcommands -----------------------------------------------------------

Report cmd_roots(const Options& o)
{
    RootSystem rs = make_roots(o);
    Report r;
    json simple = json::array(), pos = json::array(), layers = json::array();
    for (const auto& v : rs.simple_ambient()) simple.push_back(rats(v));
    for (int id = 0; id < rs.num_positive(); ++id) {
        json j = root_json(rs, id);
        j["ambient"] = rats(rs.ambient(id));
        pos.push_back(j);
    }
    for (int i = 1; i <= rs.max_height(); ++i) layers.push_back(layer_roots(rs, i).size());
    RationalVector rho_amb(rs.ambient_dim(), Rational(0));
    for (int id = 0; id < rs.num_positive(); ++id) {
        RationalVector a = rs.ambient(id);
        for (int i = 0; i < rs.ambient_dim(); ++i) rho_amb[i] += a[i] / 2;
    }
    r.doc = {{"type", rs.name()}, {"rank", rs.rank()},      {"m", rs.num_positive()}, {"h", rs.max_height()},
             {"simple_roots", simple}, {"positive_roots", pos}, {"rho", rats(rho_amb)},  {"layer_sizes", layers}};
    std::ostringstream t;
    t << rs.name() << ": " << rs.num_positive() << " positive root" << (rs.num_positive() == 1 ? "" : "s") << ", h = " << rs.max_height()
      << "\n";
    for (int id = 0; id < rs.num_positive(); ++id) t << "  " << id << "  ht " << rs.height(id) << "  " << rs.ambient_label(id) << "\n";
    t << "rho = (" << join_rationals(rho_amb) << ")\n";
    r.text = t.str();
    return r;
}

Report cmd_operators(const Options& o)
{
    RootSystem rs = make_roots(o);
    StructureConstants N(rs);
    Ordering ord = ordering_for(rs);
    LieOps ops(rs, N, ord, parse_weight(rs, o.lambda, o.rho_shifted, "--lambda"));
    Report r;
    json zeta = json::array(), eta = json::object(), d = json::object();
    std::ostringstream t;
    t << "variables (x_1..x_" << ord.size() << "):";
    for (int root : ord.order) t << " " << rs.ambient_label(root);
    t << "\n";
    for (int i = 0; i < rs.rank(); ++i) {
        zeta.push_back(ops.zeta(i).str());
        t << "zeta_" << i + 1 << " = " << ops.zeta(i).str() << "\n";
    }
    for (int b = 0; b < rs.num_positive(); ++b) {
        eta[rs.ambient_label(b)] = ops.eta(b).str();
        t << "eta[" << rs.ambient_label(b) << "] = " << ops.eta(b).str() << "\n";
    }
    for (int b = 0; b < rs.num_positive(); ++b) {
        d[rs.ambient_label(b)] = ops.d(b).str();
        t << "d[" << rs.ambient_label(b) << "] = " << ops.d(b).str() << "\n";
    }
    r.doc = {{"type", rs.name()},  {"lambda", rats(ops.lambda().coords)}, {"variables", variables_json(rs, ord)},
             {"zeta", zeta},        {"eta", eta},                         {"d", d}};
    r.text = t.str();
    return r;
}

Report cmd_weyl_orbit(const Options& o)
{
    RootSystem rs = make_roots(o);
    StructureConstants N(rs);
    Ordering ord = ordering_for(rs);
    LieOps ops(rs, N, ord, parse_weight(rs, o.lambda, o.rho_shifted, "--lambda"));
    WeylAction W(ops, o.depth);
    std::vector<WeylElement> elements;
    if (!o.words.empty()) {
        for (const auto& w : o.words) elements.push_back(parse_word(rs, w));
    } else {
        if (rs.rank() > 3) throw UsageError("rank > 3 needs explicit --word values");
        elements = weyl_group_elements(rs);
    }
    Report r;
    json items = json::array();
    std::ostringstream t;
    for (const auto& w : elements) {
        Series s = W.apply_word(w, W.one());
        Weight mu = dot_action(rs, w, ops.lambda());
        bool singular = true;
        for (int a = 0; a < rs.rank(); ++a) singular = singular && act(ops.d(a), s).is_zero();
        auto wt = weight_of(s, rs, ops.lambda());
        bool weight_ok = wt && *wt == mu;
        r.ok = r.ok && singular && weight_ok;
        json j{{"word", word_json(w)}, {"dot_weight", rats(mu.coords)}, {"annihilated", singular}, {"weight_matches", weight_ok}};
        j["series"] = series_json(s);
        items.push_back(j);
        t << word_text(w) << ": w.lambda = (" << join_rationals(mu.coords) << "), " << s.size() << " terms"
          << (s.exact() ? " (exact)" : " (depth " + std::to_string(*s.depth()) + ")") << (singular ? "" : ", NOT annihilated") << "\n";
        t << indent(s.str());
    }
    r.doc = {{"type", rs.name()}, {"lambda", rats(ops.lambda().coords)}, {"depth", o.depth}, {"variables", variables_json(rs, ord)},
             {"orbit", items}};
    r.text = t.str();
    return r;
}

Report cmd_singular(const Options& o)
{
    RootSystem base = make_roots(o);
    if (o.word.empty() == o.root.empty()) throw UsageError("give exactly one of --weyl-word and --root");
    std::optional<SpContext> sp;
    if (is_sp(base)) sp.emplace(base.rank());
    const RootSystem& rs = sp ? sp->roots() : base;
    std::optional<StructureConstants> own;
    if (!sp) own.emplace(rs);
    const StructureConstants& N = sp ? sp->constants() : *own;
    Ordering ord = sp ? sp->ordering() : lex_ordering(rs);
    LieOps ops(rs, N, ord, parse_weight(rs, o.lambda, o.rho_shifted, "--lambda"));

    WeylElement w;
    if (!o.root.empty()) {
        auto g = parse_root(rs, o.root);
        if (!g || !rs.is_positive(*g)) throw UsageError("--root: not a positive root of " + rs.name());
        w = reflection_word(rs, *g);
    } else {
        w = parse_word(rs, o.word);
    }

    SingularResult res = solve_singular(ops, w, o.depth);
    auto names = lowering_names(rs, ord);
    Report r;
    r.ok = res.consistent() && (!res.polynomial() || res.verified);
    r.doc = {{"type", rs.name()},
             {"lambda", rats(ops.lambda().coords)},
             {"word", word_json(w)},
             {"mu", rats(res.mu.coords)},
             {"variables", variables_json(rs, ord)},
             {"linked", res.chain.has_value()},
             {"chain", chain_json(rs, res.chain)},
             {"polynomial", res.polynomial()},
             {"verified", res.verified},
             {"consistent", res.consistent()}};
    std::ostringstream t;
    t << rs.name() << " lambda = (" << join_rationals(ops.lambda().coords) << "), w = " << word_text(w) << ", w.lambda = ("
      << join_rationals(res.mu.coords) << ")\n";
    t << "strongly linked: " << (res.chain ? "yes" : "no") << "\n";
    if (res.polynomial()) {
        r.doc["vector"] = vector_json(*res.vector, names);
        t << "singular vector (verified: " << (res.verified ? "yes" : "no") << "):\n" << vector_text(*res.vector, names);
        if (sp) {
            std::vector<std::string> cn;
            for (int p = 0; p < ord.size(); ++p) cn.push_back(sp->var_label(p));
            PBWVector in_c = sp_to_chevalley(*sp, *res.vector);  // c_β = ±1, so the map is an involution
            r.doc["sp_basis"] = {{"variables", cn}, {"vector", vector_json(in_c, cn)}};
            t << "in the C_{i,j} basis:\n" << vector_text(in_c, cn);
        }
    } else {
        r.doc["series"] = series_json(res.series);
        t << "w(1) is not a polynomial:\n" << indent(res.series.str());
    }
    if (!res.consistent()) t << "INCONSISTENT with strong linkage\n";
    r.text = t.str();
    return r;
}

Report cmd_linkage(const Options& o)
{
    RootSystem rs = make_roots(o);
    Weight lam = parse_weight(rs, o.lambda, o.rho_shifted, "--lambda");
    Report r;
    std::ostringstream t;
    if (!o.mu.empty()) {
        Weight mu = parse_weight(rs, o.mu, o.rho_shifted, "--mu");
        auto chain = strongly_linked(rs, lam, mu);
        r.doc = {{"type", rs.name()}, {"lambda", rats(lam.coords)}, {"mu", rats(mu.coords)}, {"linked", chain.has_value()},
                 {"chain", chain_json(rs, chain)}};
        t << "mu " << (chain ? "is" : "is not") << " strongly linked to lambda\n";
        if (chain)
            for (const auto& s : chain->steps)
                t << "  s_[" << rs.ambient_label(s.root) << "], k = " << to_string(s.k) << " -> (" << join_rationals(s.weight.coords) << ")\n";
    } else {
        json list = json::array();
        for (const auto& c : singular_weights(rs, lam, o.bound)) {
            list.push_back({{"mu", rats(c.target.coords)}, {"chain", chain_json(rs, c)}});
            t << "(" << join_rationals(c.target.coords) << ")  via " << c.steps.size() << " step" << (c.steps.size() == 1 ? "" : "s") << "\n";
        }
        r.doc = {{"type", rs.name()}, {"lambda", rats(lam.coords)}, {"bound", o.bound}, {"weights", list}};
    }
    r.text = t.str();
    return r;
}

Report cmd_oracle_check(const Options& o)
{
    RootSystem rs = make_roots(o);
    StructureConstants N(rs);
    Ordering ord = lex_ordering(rs);
    Weight lam = parse_weight(rs, o.lambda, o.rho_shifted, "--lambda");
    Weight mu = parse_weight(rs, o.mu, o.rho_shifted, "--mu");
    PBWModule M(rs, N, ord, lam);
    auto ker = singular_kernel(M, mu);
    bool linked = strongly_linked(rs, lam, mu).has_value();
    auto names = lowering_names(rs, ord);
    Report r;
    r.ok = ker.size() <= 1 && (mu == lam || ker.empty() != linked);
    json basis = json::array();
    std::ostringstream t;
    t << "kernel dimension " << ker.size() << ", strongly linked: " << (linked ? "yes" : "no") << "\n";
    for (const auto& v : ker) {
        basis.push_back(vector_json(v, names));
        t << vector_text(v, names);
    }
    r.doc = {{"type", rs.name()},     {"lambda", rats(lam.coords)}, {"mu", rats(mu.coords)}, {"variables", variables_json(rs, ord)},
             {"dimension", ker.size()}, {"basis", basis},             {"linked", linked},       {"consistent", r.ok}};
    r.text = t.str();
    return r;
}

json layer_json(const RootSystem& rs, const LayerReport& l)
{
    json hanging = json::array(), U = json::array(), V = json::array();
    for (const auto& s : l.pruning.steps) hanging.push_back({rs.ambient_label(s.beta), rs.ambient_label(s.gamma)});
    for (int b : l.core.U) U.push_back(rs.ambient_label(b));
    for (int g : l.core.V) V.push_back(rs.ambient_label(g));
    json j{{"layer", l.layer}, {"rows", l.rows}, {"cols", l.cols}, {"rank", l.rank}, {"full", l.full}};
    j["hanging_edges"] = hanging;
    j["lemma_holds"] = l.pruning.lemma_holds();
    j["central"] = {{"U", U}, {"V", V}};
    j["parity"] = l.parity ? json(*l.parity ? "odd" : "even") : json(nullptr);
    j["determinant"] = l.determinant ? json(l.determinant->get_str()) : json(nullptr);
    return j;
}

std::string layer_text(const RootSystem& rs, const LayerReport& l)
{
    std::ostringstream t;
    t << "layer " << l.layer << ": " << l.rows << "x" << l.cols << " rank " << l.rank << (l.full ? " full" : " DEFICIENT");
    for (const auto& s : l.pruning.steps) t << "\n  hanging edge (" << rs.ambient_label(s.beta) << ", " << rs.ambient_label(s.gamma) << ")";
    if (!l.core.U.empty()) t << "\n  central graph " << l.core.U.size() << "x" << l.core.V.size();
    if (l.parity) t << ", det " << l.determinant->get_str() << " (" << (*l.parity ? "odd" : "even") << ")";
    t << "\n";
    return t.str();
}

Report cmd_rank_check(const Options& o)
{
    RootSystem rs = make_roots(o);
    StructureConstants N(rs);
    if (o.layer && (*o.layer < 1 || *o.layer >= rs.max_height()))
        throw UsageError("--layer must lie in 1.." + std::to_string(rs.max_height() - 1));
    RankReport rep = rank_certify(N, o.layer);
    Report r;
    std::ostringstream t;
    if (!o.dot.empty()) {
        std::ofstream out(o.dot);
        if (!out) throw UsageError("cannot write " + o.dot);
        out << export_hasse(rs);
    }
    if (o.layer) {
        const LayerReport& l = rep.layers.front();
        r.ok = l.full && l.pruning.lemma_holds();
        r.doc = layer_json(rs, l);
        r.doc["type"] = rs.name();
        t << rs.name() << " " << layer_text(rs, l);
    } else {
        r.ok = rep.full && rep.layers_full() && rep.lemma_holds();
        json layers = json::array();
        t << rs.name() << ": rank A = " << rep.rank << " of " << rep.m - rep.n << (rep.full ? " (full)" : " (DEFICIENT)") << "\n";
        for (const auto& l : rep.layers) {
            layers.push_back(layer_json(rs, l));
            t << layer_text(rs, l);
        }
        r.doc = {{"type", rs.name()}, {"m", rep.m}, {"n", rep.n}, {"rows", rep.m}, {"cols", rep.m - rep.n},
                 {"rank", rep.rank},   {"full", rep.full}, {"layers", layers}};
    }
    r.text = t.str();
    return r;
}

Report cmd_verify_all(const Options& o)
{
    Report r;
    json items = json::array();
    std::ostringstream t;
    auto criteria = all_criteria();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult c = run_criterion(criteria[i], static_cast<int>(i + 1), o.acceptance);
        r.ok = r.ok && c.pass;
        items.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        t << (c.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << c.detail << "\n";
        // Timings vary between runs; keep them off stdout.
        std::cerr << "criterion " << c.id << ": " << c.seconds << "s\n";
    }
    r.doc = {{"seed", o.acceptance.seed}, {"criteria", items}, {"pass", r.ok}};
    r.text = t.str();
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Singular vectors of Verma modules via Weyl-group differential operators"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::string format = "json", output;
    unsigned long seed = o.acceptance.seed;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output,-o", output, "Write the report to a file");
    app.add_option("--seed", seed, "Seed for random probes");

    auto typed = [&](CLI::App* sub) {
        sub->add_option("--type", o.type, "Cartan type A..G")->required();
        sub->add_option("--rank", o.rank, "Rank")->required();
    };
    auto weighted = [&](CLI::App* sub, bool need_mu) {
        sub->add_option("--lambda", o.lambda, "Dynkin labels, comma separated rationals")->required();
        if (need_mu) sub->add_option("--mu", o.mu, "Dynkin labels of the second weight")->required();
        sub->add_flag("--rho-shifted", o.rho_shifted, "Weights are given as labels of lambda + rho");
    };

    std::vector<std::pair<CLI::App*, std::function<Report(const Options&)>>> handlers;
    auto* roots = app.add_subcommand("roots", "Root system data");
    typed(roots);
    handlers.push_back({roots, cmd_roots});

    auto* operators = app.add_subcommand("operators", "Differential operators zeta, eta, d");
    typed(operators);
    weighted(operators, false);
    handlers.push_back({operators, cmd_operators});

    auto* orbit = app.add_subcommand("weyl-orbit", "w(1) for w in W or for given words");
    typed(orbit);
    weighted(orbit, false);
    orbit->add_option("--depth", o.depth, "Truncation depth")->check(CLI::NonNegativeNumber);
    orbit->add_option("--word", o.words, "Weyl word, e.g. 1,2,1 (repeatable)");
    handlers.push_back({orbit, cmd_weyl_orbit});

    auto* singular = app.add_subcommand("singular", "Singular vector of weight w.lambda");
    typed(singular);
    weighted(singular, false);
    singular->add_option("--weyl-word", o.word, "Simple reflections, e.g. 1,2,1 (rightmost acts first)");
    singular->add_option("--root", o.root, "Positive root for s_gamma, e.g. e1+e2 or 1,1");
    singular->add_option("--depth", o.depth, "Truncation depth")->check(CLI::NonNegativeNumber);
    handlers.push_back({singular, cmd_singular});

    auto* linkage = app.add_subcommand("linkage", "Strong linkage mu up-arrow lambda");
    typed(linkage);
    weighted(linkage, false);
    linkage->add_option("--mu", o.mu, "Target weight; omit to list all within --bound");
    linkage->add_option("--bound", o.bound, "Height bound for the listing")->check(CLI::NonNegativeNumber);
    handlers.push_back({linkage, cmd_linkage});

    auto* oracle = app.add_subcommand("oracle-check", "Singular vectors of weight mu by PBW straightening");
    typed(oracle);
    weighted(oracle, true);
    handlers.push_back({oracle, cmd_oracle_check});

    auto* rank = app.add_subcommand("rank-check", "Rank of A(Phi) and layer bigraphs");
    typed(rank);
    rank->add_option("--layer", o.layer, "Single layer i");
    rank->add_option("--dot", o.dot, "Write the root poset Hasse diagram in DOT format");
    handlers.push_back({rank, cmd_rank_check});

    auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion");
    verify->add_option("--core-rank", o.acceptance.core_rank, "Rank bound for ordering and shape checks")->check(CLI::Range(1, 8));
    verify->add_option("--probe-rank", o.acceptance.probe_rank, "Rank bound for probe-based checks")->check(CLI::Range(1, 4));
    verify->add_option("--poset-rank", o.acceptance.poset_rank, "Rank bound for the root poset checks")->check(CLI::Range(1, 8));
    handlers.push_back({verify, cmd_verify_all});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    o.acceptance.seed = seed;

    Report report;
    try {
        for (auto& [sub, fn] : handlers)
            if (sub->parsed()) report = fn(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DepthExhausted& e) {
        std::cerr << "depth exhausted: " << e.what() << " (raise --depth)\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string body = format == "json" ? report.doc.dump(2) + "\n" : report.text;
    if (output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
        out << body;
    }
    return report.ok ? 0 : 1;
}
