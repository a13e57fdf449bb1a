#ifndef EMCOVER_SRC_COVER_SEARCH_HPP
#define EMCOVER_SRC_COVER_SEARCH_HPP

// Constraint-driven depth-first search shared by every exact solver.
//
// A problem is a universe of at most 128 items (r-sets or arcs) and an
// ordered list of monotone constraints. Each constraint offers options, each
// option a set of items introducing one "pivot" vertex; the constraint holds
// once `need` of its options are fully present. The search repeatedly picks
// the first unsatisfied constraint and branches on the options not yet
// present, so any solution extending the current state stays reachable.
//
// Symmetry: vertices no chosen item touches are interchangeable, so among
// options whose pivot is untouched only the smallest pivot is tried. Every
// isomorphism class of solutions within budget is still reached.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "emcover/setsys.hpp"

namespace emcover::detail {

using ItemMask = unsigned __int128;

inline constexpr int kMaxItems = 128;

inline ItemMask item_bit(int i) { return ItemMask{1} << i; }

inline int popcount(ItemMask m) {
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
           __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

struct Option {
    ItemMask items = 0;
    Vertex pivot = 0;
};

struct Constraint {
    std::vector<Option> options;  // ascending pivot
    int need = 1;
};

// Admissible bound: each star must end up holding `need` items, and one item
// sits in at most `per_item` stars.
struct StarBound {
    std::vector<ItemMask> stars;
    int need = 0;
    int per_item = 1;

    int extra_items(ItemMask state) const {
        long deficit = 0;
        for (const auto& s : stars) {
            const int have = popcount(state & s);
            if (have < need) deficit += need - have;
        }
        return static_cast<int>((deficit + per_item - 1) / per_item);
    }
};

struct Problem {
    int n = 0;
    int universe = 0;
    std::vector<VertexMask> item_vertices;
    std::vector<Constraint> constraints;
    StarBound bound;
    // Items that may no longer be added given the state (oriented: reversed arcs).
    std::function<ItemMask(ItemMask)> blocked;
};

struct Limits {
    std::uint64_t node_cap = 0;  // 0 = unlimited
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
    int workers = 1;
};

enum class Status { found, infeasible, exhausted };

struct Outcome {
    Status status = Status::infeasible;
    ItemMask solution = 0;
    std::vector<ItemMask> all;  // enumeration mode, sorted, unique
    std::uint64_t nodes = 0;
};

/// Searches for states of at most `max_items` items satisfying every
/// constraint. With `enumerate`, collects all of them reachable under the
/// symmetry rule; otherwise returns the first in depth-first order.
Outcome search(const Problem& p, int max_items, bool enumerate, const Limits& limits);

}  // namespace emcover::detail

#endif  // EMCOVER_SRC_COVER_SEARCH_HPP
