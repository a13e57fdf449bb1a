#ifndef EMCOVER_SOLVER_HPP
#define EMCOVER_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "emcover/setsys.hpp"

namespace emcover {

class ResultsCache;

struct SearchBudget {
    std::uint64_t node_cap = 4'000'000'000ULL;
    std::chrono::milliseconds time_cap{std::chrono::minutes(30)};
    int workers = 1;
    // Lift the default size caps (n <= 12 for r=2, 9 for r=3, 8 for r=4).
    bool allow_large = false;
};

enum class ProofState { optimal, budget_exhausted };

std::string to_string(ProofState s);

struct SolveResult {
    int optimum = 0;     // best known value; proven when proof_state is optimal
    int lower_bound = 0; // largest value shown infeasible + 1
    std::variant<std::monostate, Hypergraph, Digraph> certificate;
    std::optional<std::vector<CanonicalForm>> all_optima;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> wall_time{0};
    ProofState proof_state = ProofState::optimal;
    bool from_cache = false;

    const Hypergraph& hypergraph() const { return std::get<Hypergraph>(certificate); }
    const Digraph& digraph() const { return std::get<Digraph>(certificate); }
};

/// Thrown where a proven optimum is required but the budget ran out.
class SearchExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Covering number D(n,r): fewest r-sets whose shadow is every (r-1)-set.
SolveResult solve_D(int n, int r, const SearchBudget& budget = {}, ResultsCache* cache = nullptr);

/// f(n,k,r) for s = 1 and h(n,k,r,s) in general: fewest r-sets such that
/// every k-set has at least s covering vertices.
SolveResult solve_f(int n, int k, int r, int s = 1, const SearchBudget& budget = {}, ResultsCache* cache = nullptr);

/// As solve_f, additionally listing every optimum up to isomorphism
/// (sorted canonical forms). Requires n <= kDefaultCanonicalLimit.
SolveResult enumerate_extremal(int n, int k, int r, int s = 1, const SearchBudget& budget = {});

/// Fewest arcs in a digraph on n vertices with property S_k.
SolveResult solve_digraph_min(int n, int k, const SearchBudget& budget = {}, ResultsCache* cache = nullptr);

/// All minimum digraphs with S_k up to isomorphism.
SolveResult enumerate_digraph_min(int n, int k, const SearchBudget& budget = {});

struct OrientedResult {
    std::optional<int> vertices;     // least n <= n_max admitting S_k; empty if none
    std::optional<Digraph> witness;
    std::vector<int> ruled_out;      // vertex counts shown to admit no S_k orientation
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> wall_time{0};
    ProofState proof_state = ProofState::optimal;
    bool from_cache = false;
};

/// Least number of vertices of an oriented graph with property S_k, searched up to n_max.
OrientedResult solve_oriented_min_vertices(int k, int n_max = 7, const SearchBudget& budget = {},
                                           ResultsCache* cache = nullptr);

/// Is h a member of the extremal family for k (up to isomorphism)? The inner
/// covering number comes from `inner_covering`, else the cache, else the solver.
bool is_member_G(const Hypergraph& h, int k, std::optional<int> inner_covering = std::nullopt,
                 ResultsCache* cache = nullptr, const SearchBudget& budget = {});

/// Complete bidirected (k+1)-core; every other vertex receives exactly k arcs
/// from the core and sends none.
bool is_member_A(const Digraph& d, int k);

/// Best lower bound the solver seeds its search with for h(n,k,r,s).
int f_lower_bound(int n, int k, int r, int s);

}  // namespace emcover

#endif  // EMCOVER_SOLVER_HPP
