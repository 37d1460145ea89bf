#include "ghk/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ghk {

int AdjacencyMatrix::edge_count() const {
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) e += at(i, j);
    return e;
}

bool AdjacencyMatrix::well_formed() const {
    if (n <= 0 || static_cast<int>(mult.size()) != n * n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) < 0 || at(i, j) != at(j, i)) return false;
    return true;
}

std::string AdjacencyMatrix::key() const {
    std::ostringstream os;
    os << n << ':';
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (!first) os << ',';
            os << at(i, j);
            first = false;
        }
    return os.str();
}

Multigraph::Multigraph(int vertices, std::vector<std::pair<int, int>> edges)
    : num_vertices_(vertices) {
    if (vertices < 1) throw std::invalid_argument("multigraph needs at least one vertex");
    he_vertex_.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertices || v >= vertices)
            throw std::invalid_argument("edge endpoint out of range");
        he_vertex_.push_back(u);
        he_vertex_.push_back(v);
    }
    rebuild_incidence();
}

void Multigraph::rebuild_incidence() {
    he_at_.assign(num_vertices_, {});
    for (int h = 0; h < static_cast<int>(he_vertex_.size()); ++h)
        he_at_[he_vertex_[h]].push_back(h);
}

int Multigraph::valence(int v) const { return static_cast<int>(he_at_[v].size()); }

bool Multigraph::has_loop() const {
    for (int e = 0; e < num_edges(); ++e)
        if (is_loop(e)) return true;
    return false;
}

int Multigraph::loops_at(int v) const {
    int c = 0;
    for (int e = 0; e < num_edges(); ++e)
        if (is_loop(e) && endpoint(e, 0) == v) ++c;
    return c;
}

std::vector<int> Multigraph::component_labels() const {
    std::vector<int> label(num_vertices_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < num_vertices_; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int h : he_at_[v]) {
                int w = he_vertex_[partner(h)];
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

int Multigraph::num_components() const {
    auto lab = component_labels();
    return lab.empty() ? 0 : *std::max_element(lab.begin(), lab.end()) + 1;
}

AdjacencyMatrix Multigraph::to_adjacency() const {
    AdjacencyMatrix m(num_vertices_);
    for (int e = 0; e < num_edges(); ++e) {
        int u = endpoint(e, 0), v = endpoint(e, 1);
        m.mult[u * m.n + v] += 1;
        if (u != v) m.mult[v * m.n + u] += 1;
    }
    return m;
}

Multigraph from_adjacency(const AdjacencyMatrix& m) {
    if (!m.well_formed()) throw std::invalid_argument("malformed adjacency matrix");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m.n; ++i)
        for (int j = i; j < m.n; ++j)
            for (int k = 0; k < m.at(i, j); ++k) edges.emplace_back(i, j);
    return Multigraph(m.n, std::move(edges));
}

int fundamental_rank(const Multigraph& g) {
    return g.num_edges() - g.num_vertices() + g.num_components();
}

namespace {

// Shared DFS core for articulation points and bridges on multigraphs.
// Traversal tracks half-edges so parallel edges are handled correctly.
struct LowLink {
    const Multigraph& g;
    std::vector<int> disc, low;
    std::vector<bool> is_cut;
    std::vector<bool> is_bridge;
    int timer = 0;

    explicit LowLink(const Multigraph& g_)
        : g(g_),
          disc(g_.num_vertices(), -1),
          low(g_.num_vertices(), 0),
          is_cut(g_.num_vertices(), false),
          is_bridge(g_.num_edges(), false) {}

    void dfs(int v, int entry_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int h : g.half_edges_at(v)) {
            int e = Multigraph::edge_of(h);
            if (g.is_loop(e)) continue;
            if (e == entry_edge) continue;
            int w = g.vertex_of(Multigraph::partner(h));
            if (disc[w] < 0) {
                ++children;
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (entry_edge >= 0 && low[w] >= disc[v]) is_cut[v] = true;
                if (low[w] > disc[v]) is_bridge[e] = true;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (entry_edge < 0 && children > 1) is_cut[v] = true;
    }
};

}  // namespace

std::vector<int> cut_vertices(const Multigraph& g) {
    if (!g.connected()) throw std::invalid_argument("cut_vertices requires a connected graph");
    LowLink ll(g);
    ll.dfs(0, -1);
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        // Deleting v deletes the vertex point only; each loop at v survives
        // as its own component, so a loop plus any other incidence cuts.
        int loops = g.loops_at(v);
        bool loop_cut = loops > 0 && (g.valence(v) > 2 * loops || (g.num_vertices() == 1 && loops >= 2));
        if (ll.is_cut[v] || loop_cut) out.push_back(v);
    }
    return out;
}

std::vector<int> bridges(const Multigraph& g) {
    if (!g.connected()) throw std::invalid_argument("bridges requires a connected graph");
    LowLink ll(g);
    ll.dfs(0, -1);
    std::vector<int> out;
    for (int e = 0; e < g.num_edges(); ++e)
        if (ll.is_bridge[e]) out.push_back(e);
    return out;
}

Multigraph contract_edge(const Multigraph& g, int e) {
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("edge id out of range");
    if (g.is_loop(e)) throw std::invalid_argument("cannot contract a loop");
    int a = g.endpoint(e, 0), b = g.endpoint(e, 1);
    int keep = std::min(a, b), drop = std::max(a, b);
    auto remap = [&](int v) {
        if (v == drop) return keep;
        return v > drop ? v - 1 : v;
    };
    Multigraph out;
    out.num_vertices_ = g.num_vertices() - 1;
    out.he_vertex_.reserve(g.num_half_edges() - 2);
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        out.he_vertex_.push_back(remap(g.endpoint(f, 0)));
        out.he_vertex_.push_back(remap(g.endpoint(f, 1)));
    }
    out.rebuild_incidence();
    return out;
}

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
    Multigraph out;
    out.num_vertices_ = g.num_vertices() + h.num_vertices();
    out.he_vertex_ = g.he_vertex_;
    out.he_vertex_.reserve(g.num_half_edges() + h.num_half_edges());
    for (int x : h.he_vertex_) out.he_vertex_.push_back(x + g.num_vertices());
    out.rebuild_incidence();
    return out;
}

Multigraph theta_graph() { return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph dumbbell_graph() { return Multigraph(2, {{0, 0}, {0, 1}, {1, 1}}); }

Multigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Multigraph(n, std::move(edges));
}

}  // namespace ghk
