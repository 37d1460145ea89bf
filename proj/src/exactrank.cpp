#include "ghk/exactrank.hpp"

#include <omp.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <stdexcept>

namespace ghk {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u32 mod_of(long long v, u32 p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<u32>(r);
}

u32 mod_pow(u32 b, u32 e, u32 p) {
    u64 acc = 1, base = b;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<u32>(acc);
}

u32 mod_inv(u32 a, u32 p) { return mod_pow(a, p - 2, p); }

}  // namespace

int rank_modp(const BoundaryMatrix& m, u32 p) {
    for (const auto& t : m.entries)
        if (static_cast<u64>(t.value < 0 ? -t.value : t.value) >= p)
            throw std::invalid_argument("rank_modp: prime too small for entries");
    const int R = m.rows, C = m.cols;
    std::vector<std::map<int, u32>> row(R);
    std::vector<std::set<int>> col_rows(C);
    for (const auto& t : m.entries) {
        u32 v = mod_of(t.value, p);
        if (v == 0) continue;
        row[t.row][t.col] = v;
        col_rows[t.col].insert(t.row);
    }
    std::vector<bool> col_done(C, false), row_done(R, false);
    int rank = 0;
    while (true) {
        // approximate Markowitz pivot: sparsest active column, then the
        // sparsest row in it; ties by smallest index for determinism
        int pc = -1;
        std::size_t pc_size = 0;
        for (int j = 0; j < C; ++j) {
            if (col_done[j] || col_rows[j].empty()) continue;
            if (pc < 0 || col_rows[j].size() < pc_size) {
                pc = j;
                pc_size = col_rows[j].size();
                if (pc_size == 1) break;
            }
        }
        if (pc < 0) break;
        int pr = -1;
        std::size_t pr_size = 0;
        for (int i : col_rows[pc])
            if (pr < 0 || row[i].size() < pr_size) {
                pr = i;
                pr_size = row[i].size();
            }
        ++rank;
        col_done[pc] = true;
        row_done[pr] = true;
        u32 inv = mod_inv(row[pr].at(pc), p);
        std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (int i : targets) {
            if (i == pr) continue;
            u64 factor = static_cast<u64>(row[i].at(pc)) * inv % p;
            for (const auto& [j, v] : row[pr]) {
                if (col_done[j] && j != pc) continue;  // stale column, skip bookkeeping
                u64 sub = factor * v % p;
                auto it = row[i].find(j);
                u32 cur = it == row[i].end() ? 0 : it->second;
                u32 nv = static_cast<u32>((cur + p - static_cast<u32>(sub)) % p);
                if (nv == 0) {
                    if (it != row[i].end()) {
                        row[i].erase(it);
                        col_rows[j].erase(i);
                    }
                } else {
                    if (it == row[i].end()) col_rows[j].insert(i);
                    row[i][j] = nv;
                }
            }
        }
        // retire the pivot row and column
        for (const auto& [j, v] : row[pr]) col_rows[j].erase(pr);
        row[pr].clear();
        col_rows[pc].clear();
    }
    (void)row_done;
    return rank;
}

int rank_fraction_free(const BoundaryMatrix& m) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols, 0));
    for (const auto& t : m.entries) a[t.row][t.col] = t.value;
    int rank = 0;
    cpp_int prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

int rank_dense_oracle(const BoundaryMatrix& m) {
    using boost::multiprecision::cpp_rational;
    std::vector<std::vector<cpp_rational>> a(m.rows, std::vector<cpp_rational>(m.cols, 0));
    for (const auto& t : m.entries) a[t.row][t.col] = t.value;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < m.rows; ++i) {
            if (a[i][col] == 0) continue;
            cpp_rational f = a[i][col] / a[rank][col];
            for (int j = col; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

int rank_exact(const BoundaryMatrix& m, const RankOptions& opt) {
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
    if (opt.primes.empty()) throw std::invalid_argument("rank_exact: no primes configured");
    const int np = static_cast<int>(opt.primes.size());
    std::vector<int> ranks(np, -1);
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (int i = 0; i < np; ++i) ranks[i] = rank_modp(m, opt.primes[i]);
    bool agree = true;
    for (int i = 1; i < np; ++i) agree = agree && ranks[i] == ranks[0];
    if (agree && m.cols > opt.confirm_threshold) return ranks[0];
    // disagreement or small matrix: the exact elimination is authoritative
    // (unlucky primes can only lower the rank)
    return rank_fraction_free(m);
}

}  // namespace ghk
