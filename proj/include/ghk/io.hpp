#ifndef GHK_IO_HPP
#define GHK_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ghk/complex.hpp"
#include "ghk/enumerate.hpp"
#include "ghk/multigraph.hpp"

namespace ghk {

// One record of the graph text format: line "g V E R" followed by E lines
// "u v" (0-based endpoints, u <= v, sorted ascending).
std::string graph_record(const Multigraph& g);

// Multi-record files store records sorted lexicographically (bit-exact).
void write_graphs(std::ostream& os, const std::vector<CanonicalGraph>& graphs);
std::vector<Multigraph> read_graphs(std::istream& is);

// Sparse matrix text format: "rows cols", triplets "i j v" (1-based) in
// stored order, terminator "0 0 0".
void write_matrix(std::ostream& os, const BoundaryMatrix& m);
BoundaryMatrix read_matrix(std::istream& is);

std::string basis_filename(int n, int k, BasisMode mode);

// JSON list of {key, num, den} entries for CLI output.
std::string chain_to_json(const ChainVector& v, const GradedBasis& basis);
std::string terms_to_json(const std::vector<std::pair<std::string, Rational>>& terms);

}  // namespace ghk

#endif
