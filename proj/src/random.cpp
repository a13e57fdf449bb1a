#include "emcover/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace emcover {

Hypergraph random_hypergraph(int n, int r, int m, std::mt19937_64& rng) {
    auto all = k_subsets(n, r);
    if (m < 0 || static_cast<std::size_t>(m) > all.size()) {
        throw std::invalid_argument("random_hypergraph: edge count outside [0, C(n,r)]");
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(m));
    return make_hypergraph(n, r, std::move(all));
}

Digraph random_oriented(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution present(density);
    std::bernoulli_distribution forward(0.5);
    std::vector<Arc> arcs;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (present(rng)) arcs.push_back(forward(rng) ? Arc{u, v} : Arc{v, u});
    return Digraph(n, std::move(arcs), true);
}

}  // namespace emcover
