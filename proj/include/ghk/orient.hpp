#ifndef GHK_ORIENT_HPP
#define GHK_ORIENT_HPP

#include <vector>

#include "ghk/canonical.hpp"
#include "ghk/multigraph.hpp"

namespace ghk {

// An orientation in the sense used by the complex: an ordering of the edge
// set together with an oriented basis of the cycle space H1. Cycle vectors
// are dense over edge ids; coefficients refer to the per-edge tail half-edge
// stored alongside (the coordinate of edge e is +1 when the cycle traverses
// from tail[e] to its partner).
struct Orientation {
    std::vector<int> edge_order;           // position -> edge id
    std::vector<int> tail;                 // edge id -> tail half-edge
    std::vector<std::vector<int>> cycles;  // |cycles| = fundamental rank
};

// Deterministic reference orientation: edges ordered by (min endpoint,
// max endpoint, edge id); spanning forest grown greedily in that order from
// the smallest vertex of each component; one fundamental cycle per non-tree
// edge, ordered and directed by that edge (tail at its smaller endpoint,
// loops by half-edge id).
Orientation reference_orientation(const Multigraph& g);

// Sign of an isomorphism between oriented graphs: sign of the induced edge
// permutation times the determinant sign of the induced map on H1 expressed
// in the two cycle bases. hmap maps half-edges of a to half-edges of b.
int iso_sign(const Multigraph& a, const Orientation& oa, const Multigraph& b,
             const Orientation& ob, const std::vector<int>& hmap);

// Comparison of an orientation against the intrinsic vertex-space model
// det(C0) (x) det(H0)^*. Used as an independent route to iso_sign and as the
// engine behind the half-edge surgery signs in the bialgebra module.
int vertex_model_sign(const Multigraph& g, const Orientation& o);

// iso_sign computed through the vertex model; equal to iso_sign by the
// canonical isomorphism det(R^E) (x) det(H1) ~ det(C0) (x) det(H0)^*.
int iso_sign_vertex_model(const Multigraph& a, const Orientation& oa, const Multigraph& b,
                          const Orientation& ob, const std::vector<int>& hmap);

// True iff the graph spans the zero vector: it has a loop or admits an
// orientation-reversing automorphism.
bool is_zero(const Multigraph& g);

struct SignedCanonical {
    CanonicalGraph canon;
    int sign = 0;  // 0 means the class is zero
};

// Normal form together with the sign relating (g, o) to the canonical
// representative with its reference orientation. sign = 0 when is_zero.
// Pass check_zero = false when the caller filters against a basis of known
// nonzero classes anyway (loops are still detected).
SignedCanonical reduce_to_canonical(const Multigraph& g, const Orientation& o,
                                    bool check_zero = true);

// Contract non-loop edge e of the oriented graph: coefficient
// (-1)^(i-1) from moving e (1-based position i in o's edge order) to the
// front, times the reduction sign of the transported orientation.
SignedCanonical signed_contract(const Multigraph& g, const Orientation& o, int e,
                                bool check_zero = true);

// Transported orientation on contract_edge(g, e): e removed from the edge
// order, cycle coordinates at e dropped along H1(g) ~ H1(g/e).
Orientation contracted_orientation(const Multigraph& g, const Orientation& o, int e);

// Sign of the determinant of a small integer matrix (fraction-free
// elimination); 0 when singular.
int det_sign(std::vector<std::vector<long long>> m);

}  // namespace ghk

#endif
