#ifndef GHK_MULTIGRAPH_HPP
#define GHK_MULTIGRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghk {

// Symmetric multiplicity matrix. upper(i,j) for i<j holds the number of
// parallel edges between i and j, diag(i) the number of loops at i.
struct AdjacencyMatrix {
    int n = 0;
    std::vector<int> mult;  // row-major full n*n, kept symmetric

    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int n_) : n(n_), mult(n_ * n_, 0) {}

    int& at(int i, int j) { return mult[i * n + j]; }
    int at(int i, int j) const { return mult[i * n + j]; }
    void set(int i, int j, int m) {
        mult[i * n + j] = m;
        mult[j * n + i] = m;
    }
    int edge_count() const;
    bool well_formed() const;

    // Row-major upper triangle including the diagonal, e.g. "2:0,3,0".
    std::string key() const;

    bool operator==(const AdjacencyMatrix& o) const { return n == o.n && mult == o.mult; }
    bool operator<(const AdjacencyMatrix& o) const {
        if (n != o.n) return n < o.n;
        return mult < o.mult;
    }
};

// Connected multigraph on half-edges. Edge e owns half-edges 2e and 2e+1;
// the partner involution is h ^ 1. Loops and parallel edges are allowed.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertices, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(he_vertex_.size() / 2); }
    int num_half_edges() const { return static_cast<int>(he_vertex_.size()); }

    static int partner(int h) { return h ^ 1; }
    static int edge_of(int h) { return h >> 1; }
    int vertex_of(int h) const { return he_vertex_[h]; }
    int endpoint(int e, int side) const { return he_vertex_[2 * e + side]; }
    bool is_loop(int e) const { return endpoint(e, 0) == endpoint(e, 1); }

    int valence(int v) const;
    bool has_loop() const;
    int loops_at(int v) const;
    const std::vector<int>& half_edges_at(int v) const { return he_at_[v]; }

    int num_components() const;
    bool connected() const { return num_vertices_ > 0 && num_components() == 1; }
    std::vector<int> component_labels() const;  // vertex -> component id, by min vertex

    AdjacencyMatrix to_adjacency() const;

    bool operator==(const Multigraph& o) const {
        return num_vertices_ == o.num_vertices_ && he_vertex_ == o.he_vertex_;
    }

private:
    int num_vertices_ = 0;
    std::vector<int> he_vertex_;           // half-edge -> vertex
    std::vector<std::vector<int>> he_at_;  // vertex -> incident half-edges (loops twice)

    void rebuild_incidence();
    friend Multigraph from_adjacency(const AdjacencyMatrix&);
    friend Multigraph contract_edge(const Multigraph&, int);
    friend Multigraph disjoint_union(const Multigraph&, const Multigraph&);
    friend Multigraph contract_half_edges(const Multigraph&, int, int);
};

Multigraph from_adjacency(const AdjacencyMatrix& m);

// E - V + #components.
int fundamental_rank(const Multigraph& g);

// Articulation points of the underlying multigraph (plain deletion criterion;
// deleting a vertex deletes its loops).
std::vector<int> cut_vertices(const Multigraph& g);

// Edges whose deletion disconnects. Loops and parallel-class members never qualify.
std::vector<int> bridges(const Multigraph& g);

// Merge the endpoints of non-loop edge e. Edge ids above e shift down by one,
// half-edge pairs otherwise keep their relative structure; the larger endpoint
// id is merged into the smaller and vertex ids above it shift down.
Multigraph contract_edge(const Multigraph& g, int e);

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h);

// Convenience builders used throughout the tests.
Multigraph theta_graph();
Multigraph dumbbell_graph();
Multigraph complete_graph(int n);

}  // namespace ghk

#endif
