#include "cover_search.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <thread>

namespace emcover::detail {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr int kFrontierDepth = 2;

struct Task {
    ItemMask state = 0;
    std::size_t start = 0;
    VertexMask touched = 0;
};

struct Shared {
    explicit Shared(const Limits& l) : limits(l) {}
    Limits limits;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> best_task{kNone};
};

class Walker {
  public:
    Walker(const Problem& p, int max_items, bool enumerate, Shared& shared)
        : p_(p), max_items_(max_items), enumerate_(enumerate), shared_(shared) {}

    // Returns false when the walk was cut short (found in existence mode,
    // aborted, or out of budget).
    bool run(const Task& t, std::size_t task_index) {
        task_index_ = task_index;
        const bool done = dfs(t.state, t.start, t.touched, 0);
        flush();
        return done;
    }

    void collect_frontier(std::vector<Task>& out) {
        frontier_ = &out;
        dfs(0, 0, 0, 0);
        frontier_ = nullptr;
        flush();
    }

    bool found() const { return found_; }
    ItemMask solution() const { return solution_; }
    std::vector<ItemMask>& solutions() { return solutions_; }

  private:
    std::size_t first_unsatisfied(ItemMask state, std::size_t start) const {
        for (std::size_t j = start; j < p_.constraints.size(); ++j) {
            const auto& c = p_.constraints[j];
            int have = 0;
            for (const auto& o : c.options) {
                if ((o.items & ~state) == 0 && ++have >= c.need) break;
            }
            if (have < c.need) return j;
        }
        return kNone;
    }

    bool tick() {
        if (++local_nodes_ < 1024) return true;
        flush();
        return !shared_.exhausted.load(std::memory_order_relaxed);
    }

    void flush() {
        if (local_nodes_ == 0) return;
        const auto total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
        local_nodes_ = 0;
        const auto& lim = shared_.limits;
        if ((lim.node_cap != 0 && total > lim.node_cap) || std::chrono::steady_clock::now() > lim.deadline) {
            shared_.exhausted.store(true);
        }
    }

    bool dfs(ItemMask state, std::size_t start, VertexMask touched, int depth) {
        if (!tick()) return false;
        if (!enumerate_ && frontier_ == nullptr && shared_.best_task.load(std::memory_order_relaxed) < task_index_) {
            return false;
        }
        const int cost = popcount(state);
        if (cost + p_.bound.extra_items(state) > max_items_) return true;

        if (frontier_ != nullptr && depth == kFrontierDepth) {
            frontier_->push_back({state, start, touched});
            return true;
        }

        const std::size_t j = first_unsatisfied(state, start);
        if (j == kNone) {
            if (frontier_ != nullptr) {
                frontier_->push_back({state, start, touched});
                return true;
            }
            if (enumerate_) {
                solutions_.push_back(state);
                return true;
            }
            found_ = true;
            solution_ = state;
            return false;
        }

        const ItemMask blocked = p_.blocked ? p_.blocked(state) : 0;
        bool tried_fresh = false;
        for (const auto& o : p_.constraints[j].options) {
            const ItemMask add = o.items & ~state;
            if (add == 0 || (add & blocked) != 0) continue;
            if ((touched & bit(o.pivot)) == 0) {
                if (tried_fresh) continue;
                tried_fresh = true;
            }
            if (cost + popcount(add) > max_items_) continue;
            if (!dfs(state | add, j, touched | item_vertices_of(o), depth + 1)) return false;
        }
        return true;
    }

    VertexMask item_vertices_of(const Option& o) const {
        VertexMask v = 0;
        ItemMask items = o.items;
        while (items != 0) {
            const auto lo = static_cast<std::uint64_t>(items);
            const int i = lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(items >> 64));
            v |= p_.item_vertices[static_cast<std::size_t>(i)];
            items &= items - 1;
        }
        return v;
    }

    const Problem& p_;
    int max_items_;
    bool enumerate_;
    Shared& shared_;
    std::vector<Task>* frontier_ = nullptr;
    std::size_t task_index_ = 0;
    std::uint64_t local_nodes_ = 0;
    bool found_ = false;
    ItemMask solution_ = 0;
    std::vector<ItemMask> solutions_;
};

void sort_unique(std::vector<ItemMask>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Outcome search(const Problem& p, int max_items, bool enumerate, const Limits& limits) {
    Shared shared(limits);
    Outcome out;

    if (limits.workers <= 1) {
        Walker w(p, max_items, enumerate, shared);
        w.run(Task{}, 0);
        out.nodes = shared.nodes.load();
        if (enumerate) {
            out.all = std::move(w.solutions());
            sort_unique(out.all);
            out.status = shared.exhausted ? Status::exhausted : (out.all.empty() ? Status::infeasible : Status::found);
            if (!out.all.empty()) out.solution = out.all.front();
        } else if (w.found()) {
            out.status = Status::found;
            out.solution = w.solution();
        } else {
            out.status = shared.exhausted ? Status::exhausted : Status::infeasible;
        }
        return out;
    }

    // Parallel: split the tree into subtrees in depth-first order; the answer
    // is taken from the earliest subtree holding one, which is what a single
    // worker would return.
    std::vector<Task> tasks;
    Walker(p, max_items, enumerate, shared).collect_frontier(tasks);

    std::vector<ItemMask> per_task_solution(tasks.size(), 0);
    std::vector<std::vector<ItemMask>> per_task_all(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || shared.exhausted) return;
            if (!enumerate && shared.best_task.load() < i) continue;
            Walker w(p, max_items, enumerate, shared);
            w.run(tasks[i], i);
            if (enumerate) {
                per_task_all[i] = std::move(w.solutions());
            } else if (w.found()) {
                per_task_solution[i] = w.solution();
                std::size_t cur = shared.best_task.load();
                while (i < cur && !shared.best_task.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < limits.workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    out.nodes = shared.nodes.load();
    if (enumerate) {
        for (auto& v : per_task_all) out.all.insert(out.all.end(), v.begin(), v.end());
        sort_unique(out.all);
        out.status = shared.exhausted ? Status::exhausted : (out.all.empty() ? Status::infeasible : Status::found);
        if (!out.all.empty()) out.solution = out.all.front();
        return out;
    }
    const std::size_t best = shared.best_task.load();
    if (best != kNone) {
        out.status = Status::found;
        out.solution = per_task_solution[best];
    } else {
        out.status = shared.exhausted ? Status::exhausted : Status::infeasible;
    }
    return out;
}

}  // namespace emcover::detail
