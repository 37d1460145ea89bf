#include "ghk/complex.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ghk {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

Rational& Rational::operator+=(const Rational& o) {
    *this = Rational(num * o.den + o.num * den, den * o.den);
    return *this;
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

void ChainVector::add(int index, const Rational& c) {
    auto it = entries.find(index);
    if (it == entries.end()) {
        if (!c.is_zero()) entries.emplace(index, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) entries.erase(it);
}

bool ChainVector::operator==(const ChainVector& o) const {
    return rank == o.rank && degree == o.degree && mode == o.mode && entries == o.entries;
}

ChainComplex::ChainComplex(GradedBasis basis) : basis_(std::move(basis)) {
    index_.resize(basis_.by_degree.size());
    for (std::size_t k = 0; k < basis_.by_degree.size(); ++k)
        for (std::size_t i = 0; i < basis_.by_degree[k].size(); ++i)
            index_[k].emplace(basis_.by_degree[k][i].key, static_cast<int>(i));
}

int ChainComplex::dim(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(basis_.by_degree.size())) return 0;
    return static_cast<int>(basis_.by_degree[degree].size());
}

int ChainComplex::index_of(int degree, const std::string& key) const {
    if (degree < 0 || degree >= static_cast<int>(index_.size())) return -1;
    auto it = index_[degree].find(key);
    return it == index_[degree].end() ? -1 : it->second;
}

namespace {

// Per-column boundary terms as (target index, integer coefficient).
std::map<int, long long> boundary_terms(const ChainComplex& cx, const Multigraph& g,
                                        int degree, EdgeFilter filter) {
    std::map<int, long long> out;
    std::vector<int> br;
    if (filter != EdgeFilter::ALL) br = bridges(g);
    auto is_separating = [&](int e) {
        return std::find(br.begin(), br.end(), e) != br.end();
    };
    Orientation o = reference_orientation(g);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.is_loop(e)) continue;
        if (filter == EdgeFilter::SEPARATING && !is_separating(e)) continue;
        if (filter == EdgeFilter::NONSEPARATING && is_separating(e)) continue;
        SignedCanonical sc = signed_contract(g, o, e, /*check_zero=*/false);
        if (sc.sign == 0) continue;
        int idx = cx.index_of(degree - 1, sc.canon.key);
        if (idx < 0) continue;  // zero class, or projected away in this mode
        out[idx] += sc.sign;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

ChainVector ChainComplex::boundary_graph(const CanonicalGraph& c, EdgeFilter filter) const {
    Multigraph g = from_adjacency(c.adj);
    int degree = g.num_vertices();
    ChainVector v;
    v.rank = basis_.rank;
    v.degree = degree - 1;
    v.mode = basis_.mode;
    for (auto& [idx, coef] : boundary_terms(*this, g, degree, filter))
        v.entries.emplace(idx, Rational(coef));
    return v;
}

BoundaryMatrix ChainComplex::boundary_matrix(int degree, EdgeFilter filter,
                                             bool parallel) const {
    if (degree < 2 || degree > 2 * basis_.rank - 2)
        throw std::invalid_argument("boundary_matrix: degree out of range");
    const auto& cols = basis_.by_degree[degree];
    BoundaryMatrix m;
    m.rows = dim(degree - 1);
    m.cols = static_cast<int>(cols.size());
    const int n = m.cols;
    std::vector<std::vector<Triplet>> per_col(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int j = 0; j < n; ++j) {
        Multigraph g = from_adjacency(cols[j].adj);
        for (auto& [idx, coef] : boundary_terms(*this, g, degree, filter))
            per_col[j].push_back({idx, j, coef});
    }
    for (auto& v : per_col)
        m.entries.insert(m.entries.end(), v.begin(), v.end());
    return m;
}

BoundaryMatrix matrix_product(const BoundaryMatrix& a, const BoundaryMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix_product: shape mismatch");
    // CSC view of a
    std::vector<std::vector<std::pair<int, long long>>> acol(a.cols);
    for (const auto& t : a.entries) acol[t.col].emplace_back(t.row, t.value);
    BoundaryMatrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    std::size_t i = 0;
    while (i < b.entries.size()) {
        int j = b.entries[i].col;
        std::map<int, long long> col;
        for (; i < b.entries.size() && b.entries[i].col == j; ++i)
            for (const auto& [r, v] : acol[b.entries[i].row])
                col[r] += v * b.entries[i].value;
        for (const auto& [r, v] : col)
            if (v != 0) out.entries.push_back({r, j, v});
    }
    return out;
}

BoundaryMatrix matrix_sum(const BoundaryMatrix& a, const BoundaryMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix_sum: shape mismatch");
    std::map<std::pair<int, int>, long long> acc;
    for (const auto& t : a.entries) acc[{t.col, t.row}] += t.value;
    for (const auto& t : b.entries) acc[{t.col, t.row}] += t.value;
    BoundaryMatrix out;
    out.rows = a.rows;
    out.cols = a.cols;
    for (const auto& [cr, v] : acc)
        if (v != 0) out.entries.push_back({cr.second, cr.first, v});
    return out;
}

bool dsquared_check(int n, BasisMode mode, bool parallel) {
    ChainComplex cx(graded_basis(n, mode, parallel));
    std::vector<BoundaryMatrix> full(2 * n - 1), sep(2 * n - 1), nonsep(2 * n - 1);
    for (int k = 2; k <= 2 * n - 2; ++k) {
        full[k] = cx.boundary_matrix(k, EdgeFilter::ALL, parallel);
        sep[k] = cx.boundary_matrix(k, EdgeFilter::SEPARATING, parallel);
        nonsep[k] = cx.boundary_matrix(k, EdgeFilter::NONSEPARATING, parallel);
        // the split partitions the differential
        if (!(matrix_sum(sep[k], nonsep[k]) == full[k])) return false;
    }
    for (int k = 3; k <= 2 * n - 2; ++k) {
        if (!matrix_product(full[k - 1], full[k]).entries.empty()) return false;
        if (!matrix_product(sep[k - 1], sep[k]).entries.empty()) return false;
        BoundaryMatrix anti = matrix_sum(matrix_product(sep[k - 1], nonsep[k]),
                                         matrix_product(nonsep[k - 1], sep[k]));
        if (!anti.entries.empty()) return false;
    }
    return true;
}

HomologyTable betti(int n, BasisMode mode, const std::vector<long long>& dims,
                    const std::vector<long long>& ranks_out) {
    HomologyTable t;
    t.rank = n;
    t.mode = mode;
    auto at = [](const std::vector<long long>& v, int k) -> long long {
        return k >= 0 && k < static_cast<int>(v.size()) ? v[k] : 0;
    };
    for (int k = 2 * n - 2; k >= 2; --k) {
        DegreeInfo row;
        row.degree = k;
        row.dim = at(dims, k);
        row.rank_out = at(ranks_out, k);
        row.betti = row.dim - row.rank_out - at(ranks_out, k + 1);
        if (row.betti < 0) throw std::logic_error("negative Betti number");
        t.rows.push_back(row);
    }
    return t;
}

const ChainComplex& BasisCache::at(int rank) {
    auto it = built_.find(rank);
    if (it == built_.end())
        it = built_.emplace(rank, ChainComplex(graded_basis(rank, mode_, parallel_))).first;
    return it->second;
}

}  // namespace ghk
