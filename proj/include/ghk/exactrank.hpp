#ifndef GHK_EXACTRANK_HPP
#define GHK_EXACTRANK_HPP

#include <cstdint>
#include <vector>

#include "ghk/complex.hpp"

namespace ghk {

// The largest primes below 2^31, used for the default consensus.
inline const std::vector<std::uint32_t> kDefaultPrimes = {2147483647u, 2147483629u,
                                                          2147483587u};

struct RankOptions {
    std::vector<std::uint32_t> primes = kDefaultPrimes;
    int confirm_threshold = 200;  // always confirm exactly at or below this many columns
    bool parallel = true;
};

// Rank over F_p by sparse elimination with Markowitz-style pivoting.
int rank_modp(const BoundaryMatrix& m, std::uint32_t p);

// Rank over Q: modular consensus over the option primes, escalating to exact
// fraction-free elimination on disagreement; small matrices are always
// confirmed exactly.
int rank_exact(const BoundaryMatrix& m, const RankOptions& opt = {});

// Exact fraction-free (Bareiss) elimination over arbitrary-precision integers.
int rank_fraction_free(const BoundaryMatrix& m);

// Independent dense Gaussian elimination over arbitrary-precision rationals;
// reference oracle for tests, small matrices only.
int rank_dense_oracle(const BoundaryMatrix& m);

}  // namespace ghk

#endif
