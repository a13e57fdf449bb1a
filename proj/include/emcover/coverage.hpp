#ifndef EMCOVER_COVERAGE_HPP
#define EMCOVER_COVERAGE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "emcover/setsys.hpp"

namespace emcover {

/// Inverted index from (r-1)-sets to the vertices completing them to an edge.
/// A vertex u covers A exactly when u lies in the completion set of every
/// (r-1)-subset of A, so a cover test is an intersection of these masks.
class CoverIndex {
  public:
    explicit CoverIndex(const Hypergraph& h);

    int n() const { return n_; }
    int r() const { return r_; }

    /// {u : b + u is an edge}, for an (r-1)-set b.
    VertexMask completions(VertexMask b) const;

    /// All u outside a covering a. Requires |a| >= r-1.
    VertexMask covering_vertices(VertexMask a) const;

  private:
    int n_;
    int r_;
    std::vector<VertexMask> dense_;  // colex-ranked, used when C(n, r-1) is small
    std::unordered_map<VertexMask, VertexMask> sparse_;
};

bool covers(const Hypergraph& h, Vertex u, std::span<const Vertex> a);
VertexSet covering_vertices(const Hypergraph& h, std::span<const Vertex> a);

struct CoverReport {
    bool covered = false;
    std::optional<VertexSet> witness;         // lexicographically first failing set
    std::optional<int> multiplicity_min;      // min number of covering vertices, when covered
    std::uint64_t audited = 0;                // sets examined
    std::uint64_t failures = 0;               // exhaustive mode only; otherwise 0 or 1
};

struct AuditOptions {
    bool exhaustive = false;  // keep going past the first failure
};

/// Does every k-set of h have at least s covering vertices?
/// Requires r-1 <= k < n and s >= 1.
CoverReport audit(const Hypergraph& h, int k, int s = 1, AuditOptions opts = {});

/// Minimum over all r-sets R of the number of vertices covering R. Requires r <= n-1.
int cover_multiplicity(const Hypergraph& h);

struct SkReport {
    bool holds = false;
    std::optional<VertexSet> witness;  // first k-set outside every outneighbourhood
};

/// Every k-set lies inside the outneighbourhood of some vertex. Requires n >= k+1.
SkReport has_property_Sk(const Digraph& d, int k);

/// shadow(old_h) is a subset of shadow(new_h). Same n and r required.
bool shadow_contains(const Hypergraph& new_h, const Hypergraph& old_h);

/// Every (r-1)-subset of `ground` lies in some edge of h.
bool shadow_complete_on(const Hypergraph& h, VertexMask ground);
inline bool shadow_complete(const Hypergraph& h) {
    return shadow_complete_on(h, h.n() == 64 ? ~VertexMask{0} : (VertexMask{1} << h.n()) - 1);
}

}  // namespace emcover

#endif  // EMCOVER_COVERAGE_HPP
