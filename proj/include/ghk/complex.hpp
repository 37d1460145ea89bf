#ifndef GHK_COMPLEX_HPP
#define GHK_COMPLEX_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ghk/enumerate.hpp"
#include "ghk/multigraph.hpp"
#include "ghk/orient.hpp"

namespace ghk {

struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d = 1);  // normalizes
    Rational& operator+=(const Rational& o);
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }
};

// Sparse formal linear combination of basis indices of one chain group.
struct ChainVector {
    int rank = 0;
    int degree = 0;
    BasisMode mode = BasisMode::QUOTIENT;
    std::map<int, Rational> entries;  // basis index -> coefficient, no zeros
    void add(int index, const Rational& c);
    bool operator==(const ChainVector& o) const;
};

struct Triplet {
    int row = 0, col = 0;
    long long value = 0;
    bool operator==(const Triplet& o) const {
        return row == o.row && col == o.col && value == o.value;
    }
};

// Sparse integer matrix of a differential C_k -> C_{k-1}; entries sorted by
// (col, row), column j = boundary of basis graph j.
struct BoundaryMatrix {
    int rows = 0, cols = 0;
    std::vector<Triplet> entries;
    bool operator==(const BoundaryMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

enum class EdgeFilter { ALL, SEPARATING, NONSEPARATING };

struct DegreeInfo {
    int degree = 0;
    long long dim = 0;
    long long rank_out = 0;  // rank of the boundary leaving this degree
    long long betti = 0;
};

struct HomologyTable {
    int rank = 0;
    BasisMode mode = BasisMode::QUOTIENT;
    std::vector<DegreeInfo> rows;  // degree 2n-2 downwards
};

// One rank + mode with the key->index lookup needed to express boundaries in
// the fixed sorted bases.
class ChainComplex {
  public:
    explicit ChainComplex(GradedBasis basis);

    const GradedBasis& basisset() const { return basis_; }
    int rank() const { return basis_.rank; }
    BasisMode mode() const { return basis_.mode; }
    int dim(int degree) const;
    int index_of(int degree, const std::string& key) const;  // -1 when absent

    // Signed sum of single-edge collapses of one basis graph; terms not in
    // the degree-1 basis (zero classes, and cut-vertex classes in QUOTIENT
    // mode) are dropped.
    ChainVector boundary_graph(const CanonicalGraph& c, EdgeFilter filter) const;

    BoundaryMatrix boundary_matrix(int degree, EdgeFilter filter, bool parallel = true) const;

  private:
    GradedBasis basis_;
    std::vector<std::unordered_map<std::string, int>> index_;
};

// Lazily built complexes per rank for one mode.
class BasisCache {
  public:
    explicit BasisCache(BasisMode mode = BasisMode::QUOTIENT, bool parallel = true)
        : mode_(mode), parallel_(parallel) {}
    const ChainComplex& at(int rank);

  private:
    BasisMode mode_;
    bool parallel_;
    std::map<int, ChainComplex> built_;
};

// a * b with a.cols == b.rows; entries sorted (col, row).
BoundaryMatrix matrix_product(const BoundaryMatrix& a, const BoundaryMatrix& b);
BoundaryMatrix matrix_sum(const BoundaryMatrix& a, const BoundaryMatrix& b);

// d^2 = 0 in the given mode, including the separating/non-separating split:
// ds*ds = 0, ds*dns + dns*ds = 0, and the full differential squares to zero.
bool dsquared_check(int n, BasisMode mode, bool parallel = true);

// Betti numbers from dimensions and outgoing boundary ranks, both indexed by
// degree (index k = degree k; degrees outside [2, 2n-2] must be zero).
HomologyTable betti(int n, BasisMode mode, const std::vector<long long>& dims,
                    const std::vector<long long>& ranks_out);

}  // namespace ghk

#endif
