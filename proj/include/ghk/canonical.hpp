#ifndef GHK_CANONICAL_HPP
#define GHK_CANONICAL_HPP

#include <string>
#include <vector>

#include "ghk/multigraph.hpp"

namespace ghk {

// Isomorphism-invariant vertex classification used to block the labeling
// search. Precedence: InMultiedge > InTriangle > Plain.
enum class VertexType : int { Plain = 0, InTriangle = 1, InMultiedge = 2 };

VertexType vertex_type(const Multigraph& g, int v);

struct CanonicalGraph {
    AdjacencyMatrix adj;  // normal form
    std::string key;      // adj.key()

    bool operator==(const CanonicalGraph& o) const { return key == o.key; }
    bool operator<(const CanonicalGraph& o) const { return key < o.key; }
};

struct NormalFormResult {
    CanonicalGraph canon;
    // relabel[old_vertex] = canonical position.
    std::vector<int> relabel;
    // All block-respecting labelings achieving the normal form, as
    // old-vertex -> position maps. Composing one with the inverse of another
    // yields a vertex automorphism.
    std::vector<std::vector<int>> optimal_labelings;
};

// Canonical labeling. Vertices are blocked by (loop count, type, valence) in a
// fixed precedence order; within blocks the search picks the labeling whose
// adjacency matrix is latest in lexicographic order, read column by column up
// the upper triangle (equivalently the row-major lower triangle with
// diagonal).
NormalFormResult normal_form(const Multigraph& g);

bool is_isomorphic(const Multigraph& g, const Multigraph& h);

// Vertex automorphisms of g (maps old vertex -> image vertex).
std::vector<std::vector<int>> vertex_automorphisms(const Multigraph& g);

// Full automorphisms as half-edge bijections: vertex automorphisms combined
// with all matchings of parallel edges and both traversals of each loop.
// Throws if the group is larger than max_count.
std::vector<std::vector<int>> automorphisms(const Multigraph& g,
                                            std::size_t max_count = 4000000);

// Half-edge map from g onto from_adjacency(normal_form(g).canon.adj) induced
// by the witness relabeling. Parallel edges are matched in edge-id order,
// loop half-edges in half-edge-id order.
std::vector<int> witness_half_edge_map(const Multigraph& g, const NormalFormResult& nf);

// The canonical representative graph for a normal form.
Multigraph canonical_graph(const CanonicalGraph& c);

}  // namespace ghk

#endif
