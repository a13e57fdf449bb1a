#ifndef EMCOVER_SETSYS_HPP
#define EMCOVER_SETSYS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace emcover {

// Vertices are 1-based everywhere: a system on n vertices lives on {1..n}.
using Vertex = int;
using VertexSet = std::vector<Vertex>;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << (v - 1); }

VertexMask to_mask(std::span<const Vertex> set);
VertexSet to_set(VertexMask mask);

std::uint64_t binom(int n, int k);

/// Lexicographic successor of a sorted k-subset of {1..n}; false past the last one.
bool next_subset(VertexSet& subset, int n);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<VertexSet> k_subsets(int n, int k);

/// Calls fn(const VertexSet&) on every k-subset of {1..n} in lexicographic
/// order. Stops early when fn returns false.
template <class Fn>
bool for_each_k_subset(int n, int k, Fn&& fn) {
    VertexSet s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i + 1;
    do {
        if (!fn(static_cast<const VertexSet&>(s))) return false;
    } while (next_subset(s, n));
    return true;
}

/// Same, restricted to a ground set given as a sorted vertex list.
template <class Fn>
bool for_each_k_subset_of(std::span<const Vertex> ground, int k, Fn&& fn) {
    const int m = static_cast<int>(ground.size());
    if (k > m) return true;
    VertexSet idx(static_cast<std::size_t>(k));
    VertexSet s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    do {
        for (std::size_t i = 0; i < idx.size(); ++i) s[i] = ground[static_cast<std::size_t>(idx[i] - 1)];
        if (!fn(static_cast<const VertexSet&>(s))) return false;
    } while (next_subset(idx, m));
    return true;
}

/// Position of a k-subset (given as a vertex mask) in colex order; dense in [0, C(n,k)).
std::uint64_t colex_rank(VertexMask set);

/// r-uniform hypergraph on {1..n}. Edges are sorted vertex lists kept in
/// lexicographic order without duplicates; a bitmask mirror backs lookups.
class Hypergraph {
  public:
    Hypergraph(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<VertexSet>& edges() const { return edges_; }
    std::vector<VertexMask> edge_masks() const;

    bool contains(VertexMask edge) const;
    bool contains(std::span<const Vertex> edge) const { return contains(to_mask(edge)); }

    Hypergraph with_edge(std::span<const Vertex> edge) const;
    Hypergraph without_edge(std::span<const Vertex> edge) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
    }

  private:
    friend Hypergraph make_hypergraph(int, int, std::vector<VertexSet>);
    friend Hypergraph from_masks(int, int, std::span<const VertexMask>);
    void rebuild_lookup();

    int n_;
    int r_;
    std::vector<VertexSet> edges_;
    std::vector<VertexMask> lookup_;  // sorted masks
};

/// Validates, sorts and deduplicates. Throws std::invalid_argument /
/// std::out_of_range on malformed input.
Hypergraph make_hypergraph(int n, int r, std::vector<VertexSet> edges);
Hypergraph from_masks(int n, int r, std::span<const VertexMask> edges);

Hypergraph complete_hypergraph(int n, int r);

/// All (r-1)-subsets of edges of h.
Hypergraph shadow(const Hypergraph& h);

std::vector<int> degrees(const Hypergraph& h);  // indexed by vertex - 1
std::vector<int> degree_sequence(const Hypergraph& h);  // descending

using Arc = std::pair<Vertex, Vertex>;

/// Loop-free digraph on {1..n}. When oriented, no pair carries both directions.
class Digraph {
  public:
    Digraph(int n, std::vector<Arc> arcs, bool oriented = false);

    int n() const { return n_; }
    bool oriented() const { return oriented_; }
    std::size_t size() const { return arcs_.size(); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    VertexMask out_mask(Vertex v) const { return out_[static_cast<std::size_t>(v - 1)]; }
    VertexMask in_mask(Vertex v) const { return in_[static_cast<std::size_t>(v - 1)]; }
    int indegree(Vertex v) const;
    int outdegree(Vertex v) const;
    bool has_arc(Vertex u, Vertex v) const { return (out_mask(u) & bit(v)) != 0; }

    /// True when no pair carries arcs in both directions.
    bool is_orientation() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.oriented_ == b.oriented_ && a.arcs_ == b.arcs_;
    }

  private:
    int n_;
    bool oriented_;
    std::vector<Arc> arcs_;
    std::vector<VertexMask> out_;
    std::vector<VertexMask> in_;
};

std::vector<int> indegrees(const Digraph& d);

/// Isomorphism key: the lexicographically least edge (arc) list over all
/// vertex relabelings, each edge encoded as a base-(n+1) integer so that
/// numeric order equals lexicographic order of the sorted vertex list.
struct CanonicalForm {
    char kind = 'H';  // 'H' hypergraph, 'D' digraph
    int n = 0;
    int r = 0;  // arity; 2 for digraphs
    std::vector<std::uint64_t> code;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kDefaultCanonicalLimit = 10;

CanonicalForm canonical_form(const Hypergraph& h, int limit = kDefaultCanonicalLimit);
CanonicalForm canonical_form(const Digraph& d, int limit = kDefaultCanonicalLimit);

/// The relabeled system the key was taken from.
Hypergraph canonical_hypergraph(const CanonicalForm& form);
Digraph canonical_digraph(const CanonicalForm& form);

/// Relabel by perm, where perm[v-1] is the new label of v.
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm);
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

std::string to_string(std::span<const Vertex> set);

}  // namespace emcover

#endif  // EMCOVER_SETSYS_HPP
