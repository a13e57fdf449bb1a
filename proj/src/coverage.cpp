#include "emcover/coverage.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace emcover {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

VertexMask full_mask(int n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

void check_set(int n, std::span<const Vertex> a) {
    for (Vertex v : a)
        if (v < 1 || v > n) throw std::out_of_range("vertex out of range: " + std::to_string(v));
}

// Lexicographic walk over k-subsets of {1..n} that keeps, for the current
// prefix, the intersection of completion masks over all (r-1)-subsets of the
// prefix. A prefix whose intersection (minus the prefix) has fewer than s
// vertices cannot be extended to a passing set.
class KSetScan {
  public:
    KSetScan(const CoverIndex& index, int k, int s, bool exhaustive)
        : index_(index), n_(index.n()), r_(index.r()), k_(k), s_(s), exhaustive_(exhaustive) {
        prefix_.reserve(static_cast<std::size_t>(k));
    }

    CoverReport run() {
        report_.covered = true;
        walk(1, 0, full_mask(n_));
        if (report_.covered) {
            report_.multiplicity_min = min_mult_;
        }
        return report_;
    }

  private:
    bool walk(Vertex from, VertexMask chosen, VertexMask inter) {
        const int depth = static_cast<int>(prefix_.size());
        if (depth == k_) {
            ++report_.audited;
            const int mult = std::popcount(inter & ~chosen);
            min_mult_ = std::min(min_mult_, mult);
            if (mult < s_) return fail(prefix_);
            return true;
        }
        if (!exhaustive_ && std::popcount(inter & ~chosen) < s_) {
            // every extension fails; the lexicographically first one is the witness
            VertexSet w = prefix_;
            for (Vertex v = from; static_cast<int>(w.size()) < k_; ++v) w.push_back(v);
            ++report_.audited;
            return fail(w);
        }
        const Vertex last = n_ - (k_ - depth - 1);
        for (Vertex a = from; a <= last; ++a) {
            VertexMask next = inter;
            if (depth + 1 >= r_ - 1) {
                // new (r-1)-subsets are {a} plus an (r-2)-subset of the prefix
                const int need = r_ - 2;
                for_each_k_subset_of(prefix_, need, [&](const VertexSet& sub) {
                    next &= index_.completions(to_mask(sub) | bit(a));
                    return true;
                });
            }
            prefix_.push_back(a);
            const bool keep_going = walk(a + 1, chosen | bit(a), next);
            prefix_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    bool fail(const VertexSet& w) {
        if (report_.covered) {
            report_.covered = false;
            report_.witness = w;
        }
        ++report_.failures;
        return exhaustive_;
    }

    const CoverIndex& index_;
    int n_, r_, k_, s_;
    bool exhaustive_;
    VertexSet prefix_;
    CoverReport report_;
    int min_mult_ = std::numeric_limits<int>::max();
};

}  // namespace

CoverIndex::CoverIndex(const Hypergraph& h) : n_(h.n()), r_(h.r()) {
    if (r_ < 2) throw std::invalid_argument("cover index needs r >= 2");
    const std::uint64_t slots = binom(n_, r_ - 1);
    if (slots <= kDenseLimit) dense_.assign(slots, 0);
    for (const auto& e : h.edges()) {
        const VertexMask m = to_mask(e);
        for (Vertex u : e) {
            const VertexMask b = m & ~bit(u);
            if (!dense_.empty())
                dense_[colex_rank(b)] |= bit(u);
            else
                sparse_[b] |= bit(u);
        }
    }
}

VertexMask CoverIndex::completions(VertexMask b) const {
    if (!dense_.empty()) return dense_[colex_rank(b)];
    auto it = sparse_.find(b);
    return it == sparse_.end() ? 0 : it->second;
}

VertexMask CoverIndex::covering_vertices(VertexMask a) const {
    VertexMask inter = full_mask(n_) & ~a;
    const VertexSet elems = to_set(a);
    for_each_k_subset_of(elems, r_ - 1, [&](const VertexSet& b) {
        inter &= completions(to_mask(b));
        return inter != 0;
    });
    return inter;
}

static void check_cover_args(const Hypergraph& h, std::span<const Vertex> a) {
    check_set(h.n(), a);
    if (static_cast<int>(a.size()) < h.r() - 1) {
        throw std::invalid_argument("set " + to_string(a) + " is smaller than r-1 = " + std::to_string(h.r() - 1));
    }
}

bool covers(const Hypergraph& h, Vertex u, std::span<const Vertex> a) {
    check_cover_args(h, a);
    check_set(h.n(), std::span<const Vertex>(&u, 1));
    if (std::find(a.begin(), a.end(), u) != a.end()) {
        throw std::invalid_argument("vertex " + std::to_string(u) + " lies in the set it should cover");
    }
    bool ok = true;
    for_each_k_subset_of(a, h.r() - 1, [&](const VertexSet& b) {
        ok = h.contains(to_mask(b) | bit(u));
        return ok;
    });
    return ok;
}

VertexSet covering_vertices(const Hypergraph& h, std::span<const Vertex> a) {
    check_cover_args(h, a);
    VertexSet sorted(a.begin(), a.end());
    std::sort(sorted.begin(), sorted.end());
    return to_set(CoverIndex(h).covering_vertices(to_mask(sorted)));
}

CoverReport audit(const Hypergraph& h, int k, int s, AuditOptions opts) {
    if (k < h.r() - 1 || k >= h.n()) {
        throw std::invalid_argument("audit: k = " + std::to_string(k) + " outside [r-1, n-1] = [" +
                                    std::to_string(h.r() - 1) + ", " + std::to_string(h.n() - 1) + "]");
    }
    if (s < 1) throw std::invalid_argument("audit: s must be at least 1");
    const CoverIndex index(h);
    return KSetScan(index, k, s, opts.exhaustive).run();
}

int cover_multiplicity(const Hypergraph& h) {
    if (h.r() > h.n() - 1) throw std::invalid_argument("cover_multiplicity needs r <= n-1");
    const CoverIndex index(h);
    const auto report = KSetScan(index, h.r(), 0, true).run();
    return *report.multiplicity_min;
}

SkReport has_property_Sk(const Digraph& d, int k) {
    const int n = d.n();
    if (k < 1) throw std::invalid_argument("property S_k needs k >= 1");
    if (n <= k) throw std::invalid_argument("property S_k needs n >= k+1");
    SkReport report{true, std::nullopt};
    VertexSet prefix;
    // candidates: vertices with an arc into every chosen vertex
    auto walk = [&](auto&& self, Vertex from, VertexMask chosen, VertexMask inter) -> bool {
        if ((inter & ~chosen) == 0) {
            VertexSet w = prefix;
            for (Vertex v = from; static_cast<int>(w.size()) < k; ++v) w.push_back(v);
            report = {false, std::move(w)};
            return false;
        }
        if (static_cast<int>(prefix.size()) == k) return true;
        const Vertex last = n - (k - static_cast<int>(prefix.size()) - 1);
        for (Vertex a = from; a <= last; ++a) {
            prefix.push_back(a);
            const bool ok = self(self, a + 1, chosen | bit(a), inter & d.in_mask(a));
            prefix.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    walk(walk, 1, 0, full_mask(n));
    return report;
}

bool shadow_contains(const Hypergraph& new_h, const Hypergraph& old_h) {
    if (new_h.n() != old_h.n() || new_h.r() != old_h.r()) {
        throw std::invalid_argument("shadow_contains: hypergraphs differ in n or r");
    }
    if (old_h.empty()) return true;
    const Hypergraph ns = shadow(new_h);
    const Hypergraph os = shadow(old_h);
    return std::includes(ns.edges().begin(), ns.edges().end(), os.edges().begin(), os.edges().end());
}

bool shadow_complete_on(const Hypergraph& h, VertexMask ground) {
    const CoverIndex index(h);
    const VertexSet g = to_set(ground);
    return for_each_k_subset_of(g, h.r() - 1, [&](const VertexSet& b) { return index.completions(to_mask(b)) != 0; });
}

}  // namespace emcover
