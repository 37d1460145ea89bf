#ifndef GHK_VERIFY_HPP
#define GHK_VERIFY_HPP

#include <string>
#include <vector>

#include "ghk/complex.hpp"
#include "ghk/exactrank.hpp"
#include "ghk/multigraph.hpp"

namespace ghk {

// Outcome of one structural check, suitable for the CLI's JSON report.
struct VerifyReport {
    std::string check;
    bool pass = false;
    std::string detail;
};

// Full pipeline for one rank and mode: chain dimensions, outgoing boundary
// ranks, and Betti numbers.
HomologyTable homology_table(int n, BasisMode mode, const RankOptions& opt = {});

// All 2-block partitions of {0, ..., l-1}, each normalized to the block not
// containing 0, sorted. 2^(l-1) - 1 partitions.
std::vector<std::vector<int>> two_block_partitions(int l);

// Two normalized partitions are compatible iff one block of the first is
// contained in a block of the second; in normalized form that means the
// representative blocks are nested or disjoint.
bool partitions_compatible(const std::vector<int>& a, const std::vector<int>& b);

// The complex R^G of graphs retracting onto a bridgeless graph g with at
// least one cut vertex, graded by separating-edge count. Basis graphs are
// built by blowing every cut vertex up along a laminar (pairwise compatible)
// set of 2-block partitions of its components, one choice per cut vertex;
// distinct choices yielding isomorphic graphs are identified and zero
// classes are dropped. The differential is the separating-edge part of the
// graph complex differential.
class BlowupComplex {
  public:
    const Multigraph& base() const { return base_; }
    const std::vector<int>& cut_verts() const { return cut_verts_; }
    // Normalized 2-block partitions of the components at cut vertex i.
    const std::vector<std::vector<int>>& partitions(int i) const { return partitions_[i]; }
    int max_degree() const { return static_cast<int>(basis_.size()) - 1; }
    // Compatible partition-set choices of total size k, before the passage
    // to isomorphism classes.
    long long families(int k) const { return families_[k]; }
    const std::vector<CanonicalGraph>& basisset(int k) const { return basis_[k]; }
    int dim(int k) const { return static_cast<int>(basis_[k].size()); }
    int index_of(int k, const std::string& key) const;

    // Separating-edge differential degree k -> k-1; every contraction of a
    // bridge of a basis graph must land in the next basis (closure of R^G).
    BoundaryMatrix boundary(int k) const;

  private:
    Multigraph base_;
    std::vector<int> cut_verts_;
    std::vector<std::vector<std::vector<int>>> partitions_;
    std::vector<long long> families_;
    std::vector<std::vector<CanonicalGraph>> basis_;
    friend BlowupComplex blowup_complex(const Multigraph& g, int max_components);
};

// Build R^G. Throws std::invalid_argument unless g is connected, loopless,
// bridgeless, has a cut vertex, and every cut vertex splits g into at most
// max_components components.
BlowupComplex blowup_complex(const Multigraph& g, int max_components = 5);

// Acyclicity check: (d_s)^2 = 0 on R^G and every Betti number of R^G
// vanishes (degree 0 included).
VerifyReport verify_rg_acyclic(const Multigraph& g);

// The subcomplex of graphs with a cut vertex is acyclic at rank n.
VerifyReport verify_cut_acyclic(int n, const RankOptions& opt = {});

// The projection to the cut-vertex-free quotient is a quasi-isomorphism at
// rank n: Betti numbers of the full and quotient complexes agree degreewise.
VerifyReport verify_quasi_iso(int n, const RankOptions& opt = {});

}  // namespace ghk

#endif
