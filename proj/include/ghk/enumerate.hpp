#ifndef GHK_ENUMERATE_HPP
#define GHK_ENUMERATE_HPP

#include <string>
#include <vector>

#include "ghk/canonical.hpp"
#include "ghk/multigraph.hpp"

namespace ghk {

enum class BasisMode { QUOTIENT, FULL, CUT_ONLY };

const char* to_string(BasisMode m);
BasisMode basis_mode_from_string(const std::string& s);

// Subdivide e1 and e2 with one new vertex each and join the new vertices by a
// new edge. V+2 vertices, E+3 edges, rank +1; cubic if g is cubic.
Multigraph bridge_insert(const Multigraph& g, int e1, int e2);

// Add two new vertices in the interior of e and join them by a new edge,
// creating a double edge between the new vertices. V+2, E+3, rank +1.
Multigraph doubled_edge_insert(const Multigraph& g, int e);

// All isomorphism classes (zero classes included) of connected cubic
// multigraphs of rank n without cut vertices, generated from the theta graph
// by the two insertion moves.
std::vector<CanonicalGraph> cubic_no_cut(int n, bool parallel = true);

// Independent oracle: every connected cubic multigraph class of rank n, cut
// vertices and bridges included, by backtracking over adjacency matrices.
// Bounds: n <= 5 with loops, n <= 6 restricted to loop-free graphs.
std::vector<CanonicalGraph> oracle_cubic(int n, bool allow_loops = true,
                                         bool parallel = true);

// Chain-group bases of one rank, all degrees, one mode. by_degree[k] holds
// the published (nonzero) classes of degree k sorted by canonical key;
// zero_classes[k] is the diagnostic side list of discarded zero classes.
struct GradedBasis {
    int rank = 0;
    BasisMode mode = BasisMode::QUOTIENT;
    std::vector<std::vector<CanonicalGraph>> by_degree;
    std::vector<std::vector<CanonicalGraph>> zero_classes;
    const std::vector<CanonicalGraph>& at(int k) const;
};

GradedBasis graded_basis(int n, BasisMode mode, bool parallel = true);

// Basis of the degree-k chain group at rank n. Degree range 2 <= k <= 2n-2.
std::vector<CanonicalGraph> basis(int n, int k, BasisMode mode);

}  // namespace ghk

#endif
