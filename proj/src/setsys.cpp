#include "emcover/setsys.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace emcover {

namespace {

constexpr int kBinomRows = 65;

const std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows>& binom_table() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows> t{};
        for (int i = 0; i < kBinomRows; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
        }
        return t;
    }();
    return table;
}

void check_vertex_count(int n) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (n > kMaxVertices) throw std::invalid_argument("vertex count exceeds 64");
}

std::uint64_t encode(std::span<const Vertex> sorted, int n) {
    std::uint64_t code = 0;
    for (Vertex v : sorted) code = code * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(v);
    return code;
}

VertexSet decode(std::uint64_t code, int n, int arity) {
    VertexSet s(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<Vertex>(code % static_cast<std::uint64_t>(n + 1));
        code /= static_cast<std::uint64_t>(n + 1);
    }
    return s;
}

void check_limit(int n, int limit) {
    if (n > limit) {
        throw std::invalid_argument("canonical form: n = " + std::to_string(n) +
                                    " exceeds the exhaustive-permutation limit " + std::to_string(limit));
    }
}

}  // namespace

VertexMask to_mask(std::span<const Vertex> set) {
    VertexMask m = 0;
    for (Vertex v : set) m |= bit(v);
    return m;
}

VertexSet to_set(VertexMask mask) {
    VertexSet s;
    s.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        s.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return s;
}

std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n < kBinomRows) return binom_table()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    throw std::out_of_range("binom: n too large for the 64-bit table");
}

bool next_subset(VertexSet& s, int n) {
    const int k = static_cast<int>(s.size());
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + 1 + i) --i;
    if (i < 0) return false;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

std::vector<VertexSet> k_subsets(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("k_subsets: need 0 <= k <= n");
    std::vector<VertexSet> out;
    out.reserve(binom(n, k));
    for_each_k_subset(n, k, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::uint64_t colex_rank(VertexMask set) {
    std::uint64_t rank = 0;
    int i = 1;
    while (set != 0) {
        rank += binom(std::countr_zero(set), i++);
        set &= set - 1;
    }
    return rank;
}

// ---------------------------------------------------------------------------

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
    check_vertex_count(n);
    if (r < 1) throw std::invalid_argument("uniformity must be at least 1");
}

void Hypergraph::rebuild_lookup() {
    lookup_.clear();
    lookup_.reserve(edges_.size());
    for (const auto& e : edges_) lookup_.push_back(to_mask(e));
    std::sort(lookup_.begin(), lookup_.end());
}

std::vector<VertexMask> Hypergraph::edge_masks() const {
    std::vector<VertexMask> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(to_mask(e));
    return out;
}

bool Hypergraph::contains(VertexMask edge) const {
    return std::binary_search(lookup_.begin(), lookup_.end(), edge);
}

Hypergraph Hypergraph::with_edge(std::span<const Vertex> edge) const {
    auto edges = edges_;
    edges.emplace_back(edge.begin(), edge.end());
    return make_hypergraph(n_, r_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(std::span<const Vertex> edge) const {
    VertexSet target(edge.begin(), edge.end());
    std::sort(target.begin(), target.end());
    Hypergraph h = *this;
    std::erase(h.edges_, target);
    h.rebuild_lookup();
    return h;
}

Hypergraph make_hypergraph(int n, int r, std::vector<VertexSet> edges) {
    Hypergraph h(n, r);
    if (r > n && !edges.empty()) throw std::invalid_argument("uniformity exceeds vertex count");
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != r) {
            throw std::invalid_argument("edge " + to_string(e) + " does not have " + std::to_string(r) + " vertices");
        }
        std::sort(e.begin(), e.end());
        for (Vertex v : e) {
            if (v < 1 || v > n) throw std::out_of_range("vertex out of range: " + std::to_string(v));
        }
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw std::invalid_argument("edge " + to_string(e) + " repeats a vertex");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    h.edges_ = std::move(edges);
    h.rebuild_lookup();
    return h;
}

Hypergraph from_masks(int n, int r, std::span<const VertexMask> masks) {
    std::vector<VertexSet> edges;
    edges.reserve(masks.size());
    for (VertexMask m : masks) edges.push_back(to_set(m));
    return make_hypergraph(n, r, std::move(edges));
}

Hypergraph complete_hypergraph(int n, int r) {
    return make_hypergraph(n, r, k_subsets(n, r));
}

Hypergraph shadow(const Hypergraph& h) {
    if (h.r() < 2) throw std::invalid_argument("shadow needs r >= 2");
    std::vector<VertexMask> sub;
    sub.reserve(h.size() * static_cast<std::size_t>(h.r()));
    for (const auto& e : h.edges()) {
        const VertexMask m = to_mask(e);
        for (Vertex v : e) sub.push_back(m & ~bit(v));
    }
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    return from_masks(h.n(), h.r() - 1, sub);
}

std::vector<int> degrees(const Hypergraph& h) {
    std::vector<int> d(static_cast<std::size_t>(h.n()), 0);
    for (const auto& e : h.edges())
        for (Vertex v : e) ++d[static_cast<std::size_t>(v - 1)];
    return d;
}

std::vector<int> degree_sequence(const Hypergraph& h) {
    auto d = degrees(h);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

// ---------------------------------------------------------------------------

Digraph::Digraph(int n, std::vector<Arc> arcs, bool oriented)
    : n_(n), oriented_(oriented), out_(static_cast<std::size_t>(n), 0), in_(static_cast<std::size_t>(n), 0) {
    check_vertex_count(n);
    for (const auto& [u, v] : arcs) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::out_of_range("vertex out of range in arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);
    for (const auto& [u, v] : arcs_) {
        out_[static_cast<std::size_t>(u - 1)] |= bit(v);
        in_[static_cast<std::size_t>(v - 1)] |= bit(u);
    }
    if (oriented_ && !is_orientation()) {
        throw std::invalid_argument("oriented digraph carries both directions of some pair");
    }
}

int Digraph::indegree(Vertex v) const { return std::popcount(in_mask(v)); }
int Digraph::outdegree(Vertex v) const { return std::popcount(out_mask(v)); }

bool Digraph::is_orientation() const {
    return std::none_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return has_arc(a.second, a.first); });
}

std::vector<int> indegrees(const Digraph& d) {
    std::vector<int> out(static_cast<std::size_t>(d.n()));
    for (Vertex v = 1; v <= d.n(); ++v) out[static_cast<std::size_t>(v - 1)] = d.indegree(v);
    return out;
}

// ---------------------------------------------------------------------------

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm) {
    std::vector<VertexSet> edges;
    edges.reserve(h.size());
    for (const auto& e : h.edges()) {
        VertexSet m;
        m.reserve(e.size());
        for (Vertex v : e) m.push_back(perm[static_cast<std::size_t>(v - 1)]);
        edges.push_back(std::move(m));
    }
    return make_hypergraph(h.n(), h.r(), std::move(edges));
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
    std::vector<Arc> arcs;
    arcs.reserve(d.size());
    for (const auto& [u, v] : d.arcs())
        arcs.emplace_back(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
    return Digraph(d.n(), std::move(arcs), d.oriented());
}

CanonicalForm canonical_form(const Hypergraph& h, int limit) {
    check_limit(h.n(), limit);
    const int n = h.n();
    const int r = h.r();
    CanonicalForm best{'H', n, r, {}};
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint64_t> code(h.size());
    VertexSet buf(static_cast<std::size_t>(r));
    bool first = true;
    do {
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& e = h.edges()[i];
            for (std::size_t j = 0; j < e.size(); ++j) buf[j] = perm[static_cast<std::size_t>(e[j] - 1)];
            std::sort(buf.begin(), buf.end());
            code[i] = encode(buf, n);
        }
        std::sort(code.begin(), code.end());
        if (first || code < best.code) {
            best.code = code;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

CanonicalForm canonical_form(const Digraph& d, int limit) {
    check_limit(d.n(), limit);
    const int n = d.n();
    CanonicalForm best{'D', n, 2, {}};
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint64_t> code(d.size());
    bool first = true;
    do {
        for (std::size_t i = 0; i < d.size(); ++i) {
            const auto& [u, v] = d.arcs()[i];
            const std::array<Vertex, 2> a{perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]};
            code[i] = encode(a, n);
        }
        std::sort(code.begin(), code.end());
        if (first || code < best.code) {
            best.code = code;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Hypergraph canonical_hypergraph(const CanonicalForm& form) {
    if (form.kind != 'H') throw std::invalid_argument("canonical form is not a hypergraph key");
    std::vector<VertexSet> edges;
    for (auto c : form.code) edges.push_back(decode(c, form.n, form.r));
    return make_hypergraph(form.n, form.r, std::move(edges));
}

Digraph canonical_digraph(const CanonicalForm& form) {
    if (form.kind != 'D') throw std::invalid_argument("canonical form is not a digraph key");
    std::vector<Arc> arcs;
    for (auto c : form.code) {
        auto uv = decode(c, form.n, 2);
        arcs.emplace_back(uv[0], uv[1]);
    }
    Digraph d(form.n, arcs);
    return Digraph(form.n, std::move(arcs), d.is_orientation());
}

std::string to_string(std::span<const Vertex> set) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < set.size(); ++i) os << (i ? "," : "") << set[i];
    os << '}';
    return os.str();
}

}  // namespace emcover
