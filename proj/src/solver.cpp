#include "emcover/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "cover_search.hpp"
#include "emcover/bounds.hpp"
#include "emcover/cache.hpp"
#include "emcover/constructions.hpp"
#include "emcover/coverage.hpp"
#include "emcover/io.hpp"

namespace emcover {

using detail::ItemMask;

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Item universes

struct SetUniverse {
    int n = 0;
    int r = 0;
    std::vector<VertexMask> items;  // lexicographic order of r-sets
    std::unordered_map<VertexMask, int> index;

    SetUniverse(int n_, int r_) : n(n_), r(r_) {
        for_each_k_subset(n, r, [&](const VertexSet& s) {
            index.emplace(to_mask(s), static_cast<int>(items.size()));
            items.push_back(to_mask(s));
            return true;
        });
    }

    ItemMask item(VertexMask set) const { return detail::item_bit(index.at(set)); }

    Hypergraph decode(ItemMask m) const {
        std::vector<VertexMask> edges;
        for (std::size_t i = 0; i < items.size(); ++i)
            if ((m >> i) & 1) edges.push_back(items[i]);
        return from_masks(n, r, edges);
    }
};

struct ArcUniverse {
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<int> reverse;
    std::vector<int> index;  // (u-1)*n + (v-1) -> item

    explicit ArcUniverse(int n_) : n(n_), index(static_cast<std::size_t>(n_ * n_), -1) {
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = 1; v <= n; ++v)
                if (u != v) {
                    index[static_cast<std::size_t>((u - 1) * n + (v - 1))] = static_cast<int>(arcs.size());
                    arcs.emplace_back(u, v);
                }
        for (const auto& [u, v] : arcs) reverse.push_back(at(v, u));
    }

    int at(Vertex u, Vertex v) const { return index[static_cast<std::size_t>((u - 1) * n + (v - 1))]; }

    Digraph decode(ItemMask m, bool oriented) const {
        std::vector<Arc> out;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if ((m >> i) & 1) out.push_back(arcs[i]);
        return Digraph(n, std::move(out), oriented);
    }
};

void check_universe(std::uint64_t items) {
    if (items > static_cast<std::uint64_t>(detail::kMaxItems)) {
        throw std::invalid_argument("instance too large for the exact solver (" + std::to_string(items) +
                                    " candidate items, limit 128)");
    }
}

void check_size_caps(int n, int r, const SearchBudget& budget) {
    if (budget.allow_large) return;
    const int cap = r == 2 ? 12 : r == 3 ? 9 : 8;
    if (n > cap) {
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the default search cap " +
                                    std::to_string(cap) + " for r = " + std::to_string(r) +
                                    " (allow_large lifts it)");
    }
}

detail::Problem covering_problem(const SetUniverse& u) {
    detail::Problem p;
    p.n = u.n;
    p.universe = static_cast<int>(u.items.size());
    p.item_vertices = u.items;
    for_each_k_subset(u.n, u.r - 1, [&](const VertexSet& b) {
        const VertexMask bm = to_mask(b);
        detail::Constraint c;
        c.need = 1;
        for (Vertex y = 1; y <= u.n; ++y)
            if ((bm & bit(y)) == 0) c.options.push_back({u.item(bm | bit(y)), y});
        p.constraints.push_back(std::move(c));
        ItemMask star = 0;
        for (const auto& o : p.constraints.back().options) star |= o.items;
        p.bound.stars.push_back(star);
        return true;
    });
    p.bound.need = 1;
    p.bound.per_item = u.r;
    return p;
}

detail::Problem multicover_problem(const SetUniverse& u, int k, int s) {
    detail::Problem p;
    const int r = u.r;
    p.n = u.n;
    p.universe = static_cast<int>(u.items.size());
    p.item_vertices = u.items;
    for_each_k_subset(u.n, k, [&](const VertexSet& a) {
        const VertexMask am = to_mask(a);
        detail::Constraint c;
        c.need = s;
        for (Vertex v = 1; v <= u.n; ++v) {
            if ((am & bit(v)) != 0) continue;
            ItemMask items = 0;
            for_each_k_subset_of(a, r - 1, [&](const VertexSet& b) {
                items |= u.item(to_mask(b) | bit(v));
                return true;
            });
            c.options.push_back({items, v});
        }
        p.constraints.push_back(std::move(c));
        return true;
    });
    for_each_k_subset(u.n, r - 1, [&](const VertexSet& b) {
        const VertexMask bm = to_mask(b);
        ItemMask star = 0;
        for (Vertex y = 1; y <= u.n; ++y)
            if ((bm & bit(y)) == 0) star |= u.item(bm | bit(y));
        p.bound.stars.push_back(star);
        return true;
    });
    p.bound.need = k - r + 1 + s;
    p.bound.per_item = r;
    return p;
}

detail::Problem schutte_problem(const ArcUniverse& u, int k, bool oriented) {
    detail::Problem p;
    const int n = u.n;
    p.n = n;
    p.universe = static_cast<int>(u.arcs.size());
    for (const auto& [a, b] : u.arcs) p.item_vertices.push_back(bit(a) | bit(b));
    for_each_k_subset(n, k, [&](const VertexSet& set) {
        const VertexMask sm = to_mask(set);
        detail::Constraint c;
        for (Vertex v = 1; v <= n; ++v) {
            if ((sm & bit(v)) != 0) continue;
            ItemMask items = 0;
            for (Vertex b : set) items |= detail::item_bit(u.at(v, b));
            c.options.push_back({items, v});
        }
        p.constraints.push_back(std::move(c));
        return true;
    });
    for (Vertex v = 1; v <= n; ++v) {
        ItemMask star = 0;
        for (Vertex a = 1; a <= n; ++a)
            if (a != v) star |= detail::item_bit(u.at(a, v));
        p.bound.stars.push_back(star);
    }
    p.bound.need = k;
    p.bound.per_item = 1;
    if (oriented) {
        p.blocked = [rev = u.reverse](ItemMask state) {
            ItemMask out = 0;
            while (state != 0) {
                const auto lo = static_cast<std::uint64_t>(state);
                const int i =
                    lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(state >> 64));
                out |= detail::item_bit(rev[static_cast<std::size_t>(i)]);
                state &= state - 1;
            }
            return out;
        };
    }
    return p;
}

// ---------------------------------------------------------------------------
// Iterative deepening

struct Deepening {
    bool proven = false;
    bool found = false;
    int value = 0;        // optimum when proven
    int lower_bound = 0;  // first value not shown infeasible
    ItemMask solution = 0;
    std::uint64_t nodes = 0;
};

Deepening deepen(const detail::Problem& p, int from, int to, const SearchBudget& budget, Clock::time_point start) {
    Deepening d;
    d.lower_bound = from;
    for (int m = from; m <= to; ++m) {
        detail::Limits lim;
        lim.workers = budget.workers;
        lim.deadline = start + budget.time_cap;
        lim.node_cap = budget.node_cap > d.nodes ? budget.node_cap - d.nodes : 1;
        const auto out = detail::search(p, m, false, lim);
        d.nodes += out.nodes;
        if (out.status == detail::Status::found) {
            d.found = d.proven = true;
            d.value = m;
            d.solution = out.solution;
            d.lower_bound = m;
            return d;
        }
        if (out.status == detail::Status::exhausted) return d;
        d.lower_bound = m + 1;
    }
    return d;
}

std::chrono::duration<double> since(Clock::time_point t) { return Clock::now() - t; }

void sound(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("solver produced an invalid certificate: ") + what);
}

int kk_multiplicity_bound(int n, int k, int r, int s) {
    // Every r-set needs k-r+s covering vertices; a vertex of degree d covers
    // at most C(x,r) r-sets where C(x,r-1) = d (Lovasz form of Kruskal-Katona).
    if (k < r) return 0;
    const long target = static_cast<long>(k - r + s) * static_cast<long>(binom(n, r));
    const int dmax = static_cast<int>(binom(n - 1, r - 1));
    const int need = k - r + 1 + s;
    const int dmin = static_cast<int>((binom(n - 1, r - 2) * static_cast<std::uint64_t>(need) + (r - 2)) /
                                      static_cast<std::uint64_t>(r - 1));
    const long cap = static_cast<long>(binom(n - 1, r));
    std::vector<long> cover(static_cast<std::size_t>(dmax + 1), 0);
    for (int d = 1; d <= dmax; ++d) {
        const double x = lovasz_x(d, r - 1).x;
        const double c = std::floor(fractional_binomial(x, r) + 1e-6);
        cover[static_cast<std::size_t>(d)] = std::min(cap, static_cast<long>(c));
    }
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    std::vector<long> best(static_cast<std::size_t>(target + 1), kInf);
    best[0] = 0;
    for (int v = 0; v < n; ++v) {
        std::vector<long> next(best.size(), kInf);
        for (long t = 0; t <= target; ++t) {
            if (best[static_cast<std::size_t>(t)] == kInf) continue;
            for (int d = std::max(dmin, 0); d <= dmax; ++d) {
                const long nt = std::min(target, t + cover[static_cast<std::size_t>(d)]);
                next[static_cast<std::size_t>(nt)] =
                    std::min(next[static_cast<std::size_t>(nt)], best[static_cast<std::size_t>(t)] + d);
            }
        }
        best = std::move(next);
    }
    const long degree_sum = best[static_cast<std::size_t>(target)];
    if (degree_sum >= kInf) return std::numeric_limits<int>::max();
    return static_cast<int>((degree_sum + r - 1) / r);
}

void validate_f(int n, int k, int r, int s) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (!(n > k && k >= r - 1)) throw std::invalid_argument("need n > k >= r-1");
    if (s < 1) throw std::invalid_argument("need s >= 1");
    if (s > n - k) throw std::invalid_argument("infeasible: s > n-k (a k-set has only n-k outside vertices)");
}

json f_params(int n, int k, int r, int s) { return json{{"n", n}, {"k", k}, {"r", r}, {"s", s}}; }

SolveResult from_cache_hyper(const CacheRecord& rec) {
    SolveResult res;
    res.optimum = res.lower_bound = rec.optimum;
    res.certificate = hypergraph_from_json(rec.certificate);
    res.from_cache = true;
    return res;
}

}  // namespace

std::string to_string(ProofState s) { return s == ProofState::optimal ? "optimal" : "budget_exhausted"; }

int f_lower_bound(int n, int k, int r, int s) {
    validate_f(n, k, r, s);
    const int need = k - r + 1 + s;
    const auto star = (binom(n, r - 1) * static_cast<std::uint64_t>(need) + static_cast<std::uint64_t>(r - 1)) /
                      static_cast<std::uint64_t>(r);
    return std::max(static_cast<int>(star), kk_multiplicity_bound(n, k, r, s));
}

SolveResult solve_D(int n, int r, const SearchBudget& budget, ResultsCache* cache) {
    if (!(n >= r && r >= 2)) throw std::invalid_argument("solve_D: need n >= r >= 2");
    check_size_caps(n, r, budget);
    check_universe(binom(n, r));
    const json params{{"n", n}, {"r", r}};
    if (cache != nullptr)
        if (auto rec = cache->find("D", params)) return from_cache_hyper(*rec);

    const auto start = Clock::now();
    const SetUniverse u(n, r);
    const auto problem = covering_problem(u);
    const Hypergraph greedy = greedy_covering(n, r);
    const int lb = static_cast<int>(covering_lb(n, r));
    const auto d = deepen(problem, lb, static_cast<int>(greedy.size()), budget, start);

    SolveResult res;
    res.nodes_explored = d.nodes;
    res.lower_bound = d.lower_bound;
    if (d.proven) {
        res.optimum = d.value;
        res.certificate = u.decode(d.solution);
    } else {
        res.optimum = static_cast<int>(greedy.size());
        res.certificate = greedy;
        res.proof_state = ProofState::budget_exhausted;
    }
    sound(shadow_complete(res.hypergraph()) && static_cast<int>(res.hypergraph().size()) == res.optimum,
          "covering with incomplete shadow");
    res.wall_time = since(start);
    if (cache != nullptr && res.proof_state == ProofState::optimal)
        cache->store({"D", params, res.optimum, to_json(res.hypergraph()), kSolverVersion});
    return res;
}

namespace {

struct FSetup {
    SetUniverse universe;
    detail::Problem problem;
    int lb;
    Hypergraph upper;
};

FSetup prepare_f(int n, int k, int r, int s, const SearchBudget& budget) {
    validate_f(n, k, r, s);
    check_size_caps(n, r, budget);
    check_universe(binom(n, r));
    SetUniverse u(n, r);
    auto problem = multicover_problem(u, k, s);
    Hypergraph upper = s == 1 ? build_G(n, k, r, GreedyCovering{}).graph : complete_hypergraph(n, r);
    return {std::move(u), std::move(problem), f_lower_bound(n, k, r, s), std::move(upper)};
}

SolveResult run_f(const FSetup& setup, int k, int s, const SearchBudget& budget, Clock::time_point start) {
    const auto d = deepen(setup.problem, setup.lb, static_cast<int>(setup.upper.size()), budget, start);
    SolveResult res;
    res.nodes_explored = d.nodes;
    res.lower_bound = d.lower_bound;
    if (d.proven) {
        res.optimum = d.value;
        res.certificate = setup.universe.decode(d.solution);
    } else {
        res.optimum = static_cast<int>(setup.upper.size());
        res.certificate = setup.upper;
        res.proof_state = ProofState::budget_exhausted;
    }
    sound(audit(res.hypergraph(), k, s).covered, "uncovered k-set");
    return res;
}

}  // namespace

SolveResult solve_f(int n, int k, int r, int s, const SearchBudget& budget, ResultsCache* cache) {
    validate_f(n, k, r, s);
    const json params = f_params(n, k, r, s);
    if (cache != nullptr)
        if (auto rec = cache->find("f", params)) return from_cache_hyper(*rec);
    const auto start = Clock::now();
    const auto setup = prepare_f(n, k, r, s, budget);
    auto res = run_f(setup, k, s, budget, start);
    res.wall_time = since(start);
    if (cache != nullptr && res.proof_state == ProofState::optimal)
        cache->store({"f", params, res.optimum, to_json(res.hypergraph()), kSolverVersion});
    return res;
}

SolveResult enumerate_extremal(int n, int k, int r, int s, const SearchBudget& budget) {
    validate_f(n, k, r, s);
    if (n > kDefaultCanonicalLimit) throw std::invalid_argument("enumerate_extremal: n exceeds the canonical-form limit");
    const auto start = Clock::now();
    const auto setup = prepare_f(n, k, r, s, budget);
    auto res = run_f(setup, k, s, budget, start);
    if (res.proof_state != ProofState::optimal) {
        res.wall_time = since(start);
        return res;
    }
    detail::Limits lim;
    lim.workers = budget.workers;
    lim.deadline = start + budget.time_cap;
    lim.node_cap = budget.node_cap > res.nodes_explored ? budget.node_cap - res.nodes_explored : 1;
    const auto out = detail::search(setup.problem, res.optimum, true, lim);
    res.nodes_explored += out.nodes;
    if (out.status == detail::Status::exhausted) {
        res.proof_state = ProofState::budget_exhausted;
        res.wall_time = since(start);
        return res;
    }
    std::vector<CanonicalForm> forms;
    for (ItemMask m : out.all) {
        const Hypergraph h = setup.universe.decode(m);
        sound(audit(h, k, s).covered && static_cast<int>(h.size()) == res.optimum, "enumerated optimum fails audit");
        forms.push_back(canonical_form(h));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    res.all_optima = std::move(forms);
    res.wall_time = since(start);
    return res;
}

namespace {

void validate_digraph(int n, int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (n < k + 1) throw std::invalid_argument("need n >= k+1");
    check_universe(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1));
}

}  // namespace

SolveResult solve_digraph_min(int n, int k, const SearchBudget& budget, ResultsCache* cache) {
    validate_digraph(n, k);
    const json params{{"n", n}, {"k", k}};
    if (cache != nullptr) {
        if (auto rec = cache->find("digraph", params)) {
            SolveResult res;
            res.optimum = res.lower_bound = rec->optimum;
            res.certificate = digraph_from_json(rec->certificate);
            res.from_cache = true;
            return res;
        }
    }
    const auto start = Clock::now();
    const ArcUniverse u(n);
    const auto problem = schutte_problem(u, k, false);
    // No floor is assumed: the search itself rules out every arc count below
    // the optimum (the indegree bound prunes those iterations at the root).
    const auto d = deepen(problem, 0, n * (n - 1), budget, start);
    SolveResult res;
    res.nodes_explored = d.nodes;
    res.lower_bound = d.lower_bound;
    if (d.proven) {
        res.optimum = d.value;
        res.certificate = u.decode(d.solution, false);
    } else {
        const Digraph a = build_A(n, k);
        res.optimum = static_cast<int>(a.size());
        res.certificate = a;
        res.proof_state = ProofState::budget_exhausted;
    }
    sound(has_property_Sk(res.digraph(), k).holds, "digraph without S_k");
    res.wall_time = since(start);
    if (cache != nullptr && res.proof_state == ProofState::optimal)
        cache->store({"digraph", params, res.optimum, to_json(res.digraph()), kSolverVersion});
    return res;
}

SolveResult enumerate_digraph_min(int n, int k, const SearchBudget& budget) {
    if (n > kDefaultCanonicalLimit) throw std::invalid_argument("enumerate_digraph_min: n exceeds the canonical-form limit");
    auto res = solve_digraph_min(n, k, budget);
    if (res.proof_state != ProofState::optimal) return res;
    const auto start = Clock::now();
    const ArcUniverse u(n);
    const auto problem = schutte_problem(u, k, false);
    detail::Limits lim;
    lim.workers = budget.workers;
    lim.deadline = start + budget.time_cap;
    lim.node_cap = budget.node_cap;
    const auto out = detail::search(problem, res.optimum, true, lim);
    res.nodes_explored += out.nodes;
    if (out.status == detail::Status::exhausted) {
        res.proof_state = ProofState::budget_exhausted;
        return res;
    }
    std::vector<CanonicalForm> forms;
    for (ItemMask m : out.all) {
        const Digraph g = u.decode(m, false);
        sound(has_property_Sk(g, k).holds, "enumerated digraph without S_k");
        forms.push_back(canonical_form(g));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    res.all_optima = std::move(forms);
    res.wall_time += since(start);
    return res;
}

OrientedResult solve_oriented_min_vertices(int k, int n_max, const SearchBudget& budget, ResultsCache* cache) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    const json params{{"k", k}};
    if (cache != nullptr) {
        if (auto rec = cache->find("oriented", params); rec && rec->optimum <= n_max) {
            OrientedResult res;
            res.vertices = rec->optimum;
            res.witness = digraph_from_json(rec->certificate);
            for (int n = k + 1; n < rec->optimum; ++n) res.ruled_out.push_back(n);
            res.from_cache = true;
            return res;
        }
    }
    const auto start = Clock::now();
    OrientedResult res;
    for (int n = k + 1; n <= n_max; ++n) {
        check_universe(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1));
        const ArcUniverse u(n);
        const auto problem = schutte_problem(u, k, true);
        detail::Limits lim;
        lim.workers = budget.workers;
        lim.deadline = start + budget.time_cap;
        lim.node_cap = budget.node_cap > res.nodes_explored ? budget.node_cap - res.nodes_explored : 1;
        const auto out = detail::search(problem, n * (n - 1) / 2, false, lim);
        res.nodes_explored += out.nodes;
        if (out.status == detail::Status::exhausted) {
            res.proof_state = ProofState::budget_exhausted;
            break;
        }
        if (out.status == detail::Status::found) {
            Digraph g = u.decode(out.solution, true);
            sound(has_property_Sk(g, k).holds, "oriented witness without S_k");
            res.vertices = n;
            res.witness = std::move(g);
            break;
        }
        res.ruled_out.push_back(n);
    }
    res.wall_time = since(start);
    if (cache != nullptr && res.vertices && res.proof_state == ProofState::optimal)
        cache->store({"oriented", params, *res.vertices, to_json(*res.witness), kSolverVersion});
    return res;
}

bool is_member_G(const Hypergraph& h, int k, std::optional<int> inner_covering, ResultsCache* cache,
                 const SearchBudget& budget) {
    const int n = h.n();
    const int r = h.r();
    if (r < 2 || !(n > k && k >= r - 1)) throw std::invalid_argument("is_member_G: need n > k >= r-1, r >= 2");
    const int a = k - r + 1;
    const int m = n - a;

    int inner = 0;
    if (inner_covering) {
        inner = *inner_covering;
    } else if (auto rec = cache ? cache->find("D", json{{"n", m}, {"r", r}}) : std::nullopt) {
        inner = rec->optimum;
    } else {
        SolveResult d;
        try {
            d = solve_D(m, r, budget, cache);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("covering number unavailable at this size: ") + e.what());
        }
        if (d.proof_state != ProofState::optimal) {
            throw SearchExhausted("covering number D(" + std::to_string(m) + "," + std::to_string(r) +
                                  ") unavailable within budget");
        }
        inner = d.optimum;
    }

    const BigInt expected = big_binom(n, r) - big_binom(m, r) + inner;
    if (BigInt(h.size()) != expected) return false;

    const auto deg = degrees(h);
    const int full = static_cast<int>(binom(n - 1, r - 1));
    VertexSet candidates;
    for (Vertex v = 1; v <= n; ++v)
        if (deg[static_cast<std::size_t>(v - 1)] == full) candidates.push_back(v);
    if (static_cast<int>(candidates.size()) < a) return false;

    const auto masks = h.edge_masks();
    const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    return !for_each_k_subset_of(candidates, a, [&](const VertexSet& core) {
        const VertexMask cm = to_mask(core);
        std::vector<VertexMask> inside;
        for (VertexMask e : masks)
            if ((e & cm) == 0) inside.push_back(e);
        // every r-set meeting the core is present (core vertices have full
        // degree), so only the inner covering remains to check
        return !shadow_complete_on(from_masks(n, r, inside), all & ~cm);
    });
}

bool is_member_A(const Digraph& d, int k) {
    const int n = d.n();
    if (k < 1 || n < k + 1) throw std::invalid_argument("is_member_A: need n >= k+1 >= 2");
    if (static_cast<long>(d.size()) != static_cast<long>(k) * n) return false;
    VertexMask core = 0;
    for (Vertex v = 1; v <= n; ++v)
        if (d.outdegree(v) > 0) core |= bit(v);
    if (std::popcount(core) != k + 1) return false;
    for (Vertex v = 1; v <= n; ++v) {
        if ((core & bit(v)) != 0) {
            if ((d.out_mask(v) & core) != (core & ~bit(v))) return false;
        } else if ((d.in_mask(v) & ~core) != 0 || d.indegree(v) != k) {
            return false;
        }
    }
    return true;
}

}  // namespace emcover
