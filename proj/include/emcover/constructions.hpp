#ifndef EMCOVER_CONSTRUCTIONS_HPP
#define EMCOVER_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "emcover/setsys.hpp"

namespace emcover {

struct SearchBudget;

/// How the inner covering of (r-1)-sets by r-sets is produced.
struct ExactCovering {};
struct GreedyCovering {};
struct ModularCovering {
    std::optional<int> residue;  // defaults to the vertex count of the inner set (c = m, i.e. 0 mod m)
};
struct SuppliedCovering {
    Hypergraph covering;
};
using CoveringStrategy = std::variant<ExactCovering, GreedyCovering, ModularCovering, SuppliedCovering>;

std::string strategy_name(const CoveringStrategy& s);
CoveringStrategy parse_strategy(const std::string& name);  // exact | greedy | modular

/// Unique extremal graph for f(n,k,2): vertices 1..k-1 joined to everything,
/// a near-perfect matching on k..n (a 3-vertex path when n-k+1 is odd).
Hypergraph em_graph(int n, int k);

struct ModularResult {
    Hypergraph covering;
    int patch_count = 0;
};

/// r-sets with vertex sum = c (mod n), then one patch edge per (r-1)-set the
/// base family misses. Shadow is complete on [n].
ModularResult modular_covering(int n, int r, int c);

/// Repeatedly takes the r-set covering the most uncovered (r-1)-sets, ties
/// broken lexicographically. Shadow is complete on [n].
Hypergraph greedy_covering(int n, int r);

struct BuildResult {
    Hypergraph graph;
    int inner_vertices = 0;   // n-k+r-1
    int inner_edges = 0;      // size of the inner covering
    int patch_count = 0;      // modular strategy only
    bool inner_proven_optimal = false;
};

/// A member of the extremal family: every r-set meeting {1..k-r+1}, plus an
/// inner covering on {k-r+2..n} realized by `strategy`. Exact strategy calls
/// the covering solver (budget may be null for defaults).
BuildResult build_G(int n, int k, int r, const CoveringStrategy& strategy, const SearchBudget* budget = nullptr);

/// Complete bidirected digraph on [k+1], and for each i > k+1 arcs a -> i
/// for a in choices[i] (default {1..k}). Every vertex has indegree k.
Digraph build_A(int n, int k, const std::map<Vertex, VertexSet>& choices = {});

/// Adds vertex n+1 with the inneighbourhood of v and no outarcs.
Digraph duplicate_vertex(const Digraph& d, Vertex v);

}  // namespace emcover

#endif  // EMCOVER_CONSTRUCTIONS_HPP
