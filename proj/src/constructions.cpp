#include "emcover/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "emcover/coverage.hpp"
#include "emcover/solver.hpp"

namespace emcover {

namespace {

struct StrategyName {
    std::string operator()(const ExactCovering&) const { return "exact"; }
    std::string operator()(const GreedyCovering&) const { return "greedy"; }
    std::string operator()(const ModularCovering& m) const {
        return m.residue ? "modular(c=" + std::to_string(*m.residue) + ")" : "modular";
    }
    std::string operator()(const SuppliedCovering&) const { return "supplied"; }
};

VertexMask shift(VertexMask m, int by) { return m << by; }

}  // namespace

std::string strategy_name(const CoveringStrategy& s) { return std::visit(StrategyName{}, s); }

CoveringStrategy parse_strategy(const std::string& name) {
    if (name == "exact") return ExactCovering{};
    if (name == "greedy") return GreedyCovering{};
    if (name == "modular") return ModularCovering{};
    throw std::invalid_argument("unknown covering strategy \"" + name + "\" (exact | greedy | modular)");
}

Hypergraph em_graph(int n, int k) {
    if (k < 2) throw std::invalid_argument("em_graph: need k >= 2");
    if (n <= k) throw std::invalid_argument("em_graph: need n > k");
    std::vector<VertexSet> edges;
    for (Vertex a = 1; a <= k - 1; ++a)
        for (Vertex b = a + 1; b <= n; ++b) edges.push_back({a, b});
    for (Vertex v = k; v + 1 <= n; v += 2) edges.push_back({v, v + 1});
    if ((n - k + 1) % 2 == 1) edges.push_back({n - 1, n});
    return make_hypergraph(n, 2, std::move(edges));
}

ModularResult modular_covering(int n, int r, int c) {
    if (r < 2) throw std::invalid_argument("modular_covering: need r >= 2");
    if (n < r) throw std::invalid_argument("modular_covering: need n >= r");
    if (c < 1 || c > n) throw std::invalid_argument("modular_covering: need 1 <= c <= n");

    std::vector<VertexSet> edges;
    for_each_k_subset(n, r, [&](const VertexSet& a) {
        long sum = 0;
        for (Vertex v : a) sum += v;
        if ((sum - c) % n == 0) edges.push_back(a);
        return true;
    });
    Hypergraph h = make_hypergraph(n, r, edges);

    // B misses the base family exactly when its completing residue lands in B.
    std::vector<VertexSet> bad;
    for_each_k_subset(n, r - 1, [&](const VertexSet& b) {
        long sum = 0;
        for (Vertex v : b) sum += v;
        long w = ((c - sum) % n + n) % n;
        if (w == 0) w = n;
        if (std::binary_search(b.begin(), b.end(), static_cast<Vertex>(w))) bad.push_back(b);
        return true;
    });

    ModularResult out{h, 0};
    std::vector<VertexMask> masks = h.edge_masks();
    std::sort(masks.begin(), masks.end());
    for (const auto& b : bad) {
        const VertexMask bm = to_mask(b);
        for (Vertex y = 1; y <= n; ++y) {
            if ((bm & bit(y)) != 0) continue;
            const VertexMask e = bm | bit(y);
            if (std::binary_search(masks.begin(), masks.end(), e)) continue;
            masks.insert(std::upper_bound(masks.begin(), masks.end(), e), e);
            ++out.patch_count;
            break;
        }
    }
    out.covering = from_masks(n, r, masks);
    return out;
}

Hypergraph greedy_covering(int n, int r) {
    if (r < 2) throw std::invalid_argument("greedy_covering: need r >= 2");
    if (n < r) throw std::invalid_argument("greedy_covering: need n >= r");

    // candidates in lexicographic order; gain = still-uncovered (r-1)-subsets
    std::vector<VertexMask> cand;
    for_each_k_subset(n, r, [&](const VertexSet& s) {
        cand.push_back(to_mask(s));
        return true;
    });
    std::vector<std::size_t> lex_of_colex(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) lex_of_colex[colex_rank(cand[i])] = i;

    std::vector<int> gain(cand.size(), r);
    std::vector<char> covered(binom(n, r - 1), 0);
    std::size_t uncovered = covered.size();
    std::vector<VertexMask> chosen;

    while (uncovered > 0) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < cand.size(); ++i)
            if (gain[i] > gain[best]) best = i;
        const VertexMask e = cand[best];
        chosen.push_back(e);
        for (VertexMask rest = e; rest != 0; rest &= rest - 1) {
            const VertexMask b = e & ~(rest & -rest);
            const auto slot = colex_rank(b);
            if (covered[slot] != 0) continue;
            covered[slot] = 1;
            --uncovered;
            for (Vertex y = 1; y <= n; ++y)
                if ((b & bit(y)) == 0) --gain[lex_of_colex[colex_rank(b | bit(y))]];
        }
    }
    return from_masks(n, r, chosen);
}

BuildResult build_G(int n, int k, int r, const CoveringStrategy& strategy, const SearchBudget* budget) {
    if (r < 2) throw std::invalid_argument("build_G: need r >= 2");
    if (!(n > k && k >= r - 1)) throw std::invalid_argument("build_G: need n > k >= r-1");
    const int a = k - r + 1;  // vertices {1..a} meet every edge they can
    const int m = n - a;      // inner vertices {a+1..n}

    BuildResult out{Hypergraph(n, r)};
    out.inner_vertices = m;

    Hypergraph inner(m, r);
    if (std::holds_alternative<ExactCovering>(strategy)) {
        const auto res = solve_D(m, r, budget ? *budget : SearchBudget{});
        if (res.proof_state != ProofState::optimal) {
            throw SearchExhausted("build_G: D(" + std::to_string(m) + "," + std::to_string(r) +
                                  ") not proven within budget");
        }
        inner = res.hypergraph();
        out.inner_proven_optimal = true;
    } else if (std::holds_alternative<GreedyCovering>(strategy)) {
        inner = greedy_covering(m, r);
    } else if (const auto* mod = std::get_if<ModularCovering>(&strategy)) {
        const int c = mod->residue.value_or(m);
        if (c < 1 || c > m) throw std::invalid_argument("build_G: modular residue must lie in [1, n-k+r-1]");
        auto res = modular_covering(m, r, c);
        inner = std::move(res.covering);
        out.patch_count = res.patch_count;
    } else {
        const Hypergraph& given = std::get<SuppliedCovering>(strategy).covering;
        if (given.r() != r) throw std::invalid_argument("build_G: supplied covering is not r-uniform");
        if (given.n() == m) {
            inner = given;
        } else if (given.n() == n) {
            std::vector<VertexSet> shifted;
            for (const auto& e : given.edges()) {
                if (e.front() <= a) throw std::invalid_argument("build_G: supplied covering uses a vertex outside {k-r+2..n}");
                VertexSet s;
                for (Vertex v : e) s.push_back(v - a);
                shifted.push_back(std::move(s));
            }
            inner = make_hypergraph(m, r, std::move(shifted));
        } else {
            throw std::invalid_argument("build_G: supplied covering must have n-k+r-1 or n vertices");
        }
        if (!shadow_complete(inner)) throw std::invalid_argument("build_G: supplied covering misses some (r-1)-set");
    }
    out.inner_edges = static_cast<int>(inner.size());

    std::vector<VertexMask> edges;
    const VertexMask core = a == 0 ? 0 : (VertexMask{1} << a) - 1;
    for_each_k_subset(n, r, [&](const VertexSet& s) {
        const VertexMask e = to_mask(s);
        if ((e & core) != 0) edges.push_back(e);
        return true;
    });
    for (VertexMask e : inner.edge_masks()) edges.push_back(shift(e, a));
    out.graph = from_masks(n, r, edges);
    return out;
}

Digraph build_A(int n, int k, const std::map<Vertex, VertexSet>& choices) {
    if (k < 1) throw std::invalid_argument("build_A: need k >= 1");
    if (n < k + 1) throw std::invalid_argument("build_A: need n >= k+1");
    for (const auto& [v, choice] : choices) {
        if (v <= k + 1 || v > n) throw std::invalid_argument("build_A: choice given for vertex " + std::to_string(v) + " outside {k+2..n}");
        VertexSet c = choice;
        std::sort(c.begin(), c.end());
        const bool ok = static_cast<int>(c.size()) == k && std::adjacent_find(c.begin(), c.end()) == c.end() &&
                        c.front() >= 1 && c.back() <= k + 1;
        if (!ok) throw std::invalid_argument("build_A: choice for vertex " + std::to_string(v) + " is not a k-subset of [k+1]");
    }
    std::vector<Arc> arcs;
    for (Vertex u = 1; u <= k + 1; ++u)
        for (Vertex v = 1; v <= k + 1; ++v)
            if (u != v) arcs.emplace_back(u, v);
    for (Vertex i = k + 2; i <= n; ++i) {
        auto it = choices.find(i);
        if (it != choices.end()) {
            for (Vertex a : it->second) arcs.emplace_back(a, i);
        } else {
            for (Vertex a = 1; a <= k; ++a) arcs.emplace_back(a, i);
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph duplicate_vertex(const Digraph& d, Vertex v) {
    if (v < 1 || v > d.n()) throw std::out_of_range("duplicate_vertex: vertex out of range: " + std::to_string(v));
    if (!d.is_orientation()) throw std::invalid_argument("duplicate_vertex: digraph is not oriented");
    std::vector<Arc> arcs = d.arcs();
    const Vertex copy = d.n() + 1;
    for (Vertex u : to_set(d.in_mask(v))) arcs.emplace_back(u, copy);
    return Digraph(copy, std::move(arcs), true);
}

}  // namespace emcover
