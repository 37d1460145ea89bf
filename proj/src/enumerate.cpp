#include "ghk/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ghk/orient.hpp"

namespace ghk {

const char* to_string(BasisMode m) {
    switch (m) {
        case BasisMode::QUOTIENT: return "quotient";
        case BasisMode::FULL: return "full";
        case BasisMode::CUT_ONLY: return "cutonly";
    }
    return "?";
}

BasisMode basis_mode_from_string(const std::string& s) {
    if (s == "quotient") return BasisMode::QUOTIENT;
    if (s == "full") return BasisMode::FULL;
    if (s == "cutonly" || s == "cut-only") return BasisMode::CUT_ONLY;
    throw std::invalid_argument("unknown basis mode: " + s);
}

Multigraph bridge_insert(const Multigraph& g, int e1, int e2) {
    if (e1 == e2) throw std::invalid_argument("bridge_insert: edges must be distinct");
    int a = g.num_vertices(), b = a + 1;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (e == e1 || e == e2) continue;
        edges.emplace_back(g.endpoint(e, 0), g.endpoint(e, 1));
    }
    edges.emplace_back(g.endpoint(e1, 0), a);
    edges.emplace_back(a, g.endpoint(e1, 1));
    edges.emplace_back(g.endpoint(e2, 0), b);
    edges.emplace_back(b, g.endpoint(e2, 1));
    edges.emplace_back(a, b);
    return Multigraph(g.num_vertices() + 2, std::move(edges));
}

Multigraph doubled_edge_insert(const Multigraph& g, int e) {
    int a = g.num_vertices(), b = a + 1;
    std::vector<std::pair<int, int>> edges;
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        edges.emplace_back(g.endpoint(f, 0), g.endpoint(f, 1));
    }
    edges.emplace_back(g.endpoint(e, 0), a);
    edges.emplace_back(a, b);
    edges.emplace_back(a, b);
    edges.emplace_back(b, g.endpoint(e, 1));
    return Multigraph(g.num_vertices() + 2, std::move(edges));
}

namespace {

using ClassMap = std::map<std::string, AdjacencyMatrix>;

ClassMap merge_locals(std::vector<ClassMap>& locals) {
    ClassMap out;
    for (auto& local : locals)
        for (auto& [key, adj] : local) out.emplace(key, std::move(adj));
    return out;
}

// Parallel map over the classes of a layer; each worker inserts canonical
// children into its own map, merged deterministically afterwards.
template <class Expand>
ClassMap expand_layer(const ClassMap& layer, bool parallel, Expand&& expand) {
    std::vector<const AdjacencyMatrix*> parents;
    parents.reserve(layer.size());
    for (const auto& [key, adj] : layer) parents.push_back(&adj);
    const int n = static_cast<int>(parents.size());
    std::vector<ClassMap> locals(parallel ? omp_get_max_threads() : 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i)
        expand(from_adjacency(*parents[i]), locals[parallel ? omp_get_thread_num() : 0]);
    return merge_locals(locals);
}

std::vector<CanonicalGraph> sorted_classes(const ClassMap& m) {
    std::vector<CanonicalGraph> out;
    out.reserve(m.size());
    for (const auto& [key, adj] : m) out.push_back(CanonicalGraph{adj, key});
    return out;
}

}  // namespace

std::vector<CanonicalGraph> cubic_no_cut(int n, bool parallel) {
    if (n < 2) throw std::invalid_argument("cubic_no_cut: rank must be >= 2");
    ClassMap level;
    auto theta = normal_form(theta_graph());
    level.emplace(theta.canon.key, theta.canon.adj);
    for (int r = 3; r <= n; ++r) {
        level = expand_layer(level, parallel, [](const Multigraph& g, ClassMap& out) {
            auto keep = [&out](const Multigraph& cand) {
                if (!cut_vertices(cand).empty()) return;
                auto nf = normal_form(cand);
                out.emplace(std::move(nf.canon.key), std::move(nf.canon.adj));
            };
            for (int e1 = 0; e1 < g.num_edges(); ++e1)
                for (int e2 = e1 + 1; e2 < g.num_edges(); ++e2)
                    keep(bridge_insert(g, e1, e2));
            for (int e = 0; e < g.num_edges(); ++e) keep(doubled_edge_insert(g, e));
        });
    }
    return sorted_classes(level);
}

namespace {

// Backtracking over symmetric matrices with all row sums 3 (a loop counts
// twice). Fills rows first..stop-1, then calls emit.
template <class Emit>
void complete_rows(AdjacencyMatrix& a, std::vector<int>& rem, int i, int stop,
                   bool allow_loops, const Emit& emit) {
    if (i == stop) {
        emit(a, rem);
        return;
    }
    const int V = a.n;
    auto fill = [&](auto&& self, int j) -> void {
        if (rem[i] == 0) {
            // remaining entries of the row stay 0
            complete_rows(a, rem, i + 1, stop, allow_loops, emit);
            return;
        }
        if (j == V) return;
        int cap = std::min(rem[i], rem[j]);
        // enough capacity left in later columns?
        int avail = 0;
        for (int t = j; t < V; ++t) avail += rem[t];
        if (avail < rem[i]) return;
        for (int x = 0; x <= cap; ++x) {
            if (x > 0) {
                a.set(i, j, x);
                rem[i] -= x;
                rem[j] -= x;
            }
            self(self, j + 1);
            if (x > 0) {
                rem[i] += x;
                rem[j] += x;
            }
        }
        a.set(i, j, 0);
    };
    int max_loops = allow_loops ? rem[i] / 2 : 0;
    for (int l = 0; l <= max_loops; ++l) {
        a.set(i, i, l);
        rem[i] -= 2 * l;
        fill(fill, i + 1);
        rem[i] += 2 * l;
    }
    a.set(i, i, 0);
}

}  // namespace

std::vector<CanonicalGraph> oracle_cubic(int n, bool allow_loops, bool parallel) {
    if (n < 2) throw std::invalid_argument("oracle_cubic: rank must be >= 2");
    if (n > (allow_loops ? 5 : 6)) throw std::invalid_argument("oracle_cubic: bound exceeded");
    const int V = 2 * n - 2;

    struct Prefix {
        AdjacencyMatrix a;
        std::vector<int> rem;
    };
    std::vector<Prefix> prefixes;
    {
        AdjacencyMatrix a(V);
        std::vector<int> rem(V, 3);
        int stop = std::min(2, V);
        complete_rows(a, rem, 0, stop, allow_loops,
                      [&](const AdjacencyMatrix& pa, const std::vector<int>& prem) {
                          prefixes.push_back({pa, prem});
                      });
        for (auto& p : prefixes) p.rem.resize(V);  // unchanged, defensive
        if (stop == 0) prefixes.push_back({a, rem});
    }

    const int np = static_cast<int>(prefixes.size());
    std::vector<ClassMap> locals(parallel ? omp_get_max_threads() : 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < np; ++i) {
        ClassMap& out = locals[parallel ? omp_get_thread_num() : 0];
        AdjacencyMatrix a = prefixes[i].a;
        std::vector<int> rem = prefixes[i].rem;
        complete_rows(a, rem, std::min(2, V), V, allow_loops,
                      [&](const AdjacencyMatrix& fa, const std::vector<int>&) {
                          Multigraph g = from_adjacency(fa);
                          if (!g.connected()) return;
                          auto nf = normal_form(g);
                          out.emplace(std::move(nf.canon.key), std::move(nf.canon.adj));
                      });
    }
    ClassMap merged = merge_locals(locals);
    return sorted_classes(merged);
}

const std::vector<CanonicalGraph>& GradedBasis::at(int k) const {
    if (k < 2 || k > 2 * rank - 2) throw std::invalid_argument("degree out of range");
    return by_degree[k];
}

GradedBasis graded_basis(int n, BasisMode mode, bool parallel) {
    if (n < 2) throw std::invalid_argument("graded_basis: rank must be >= 2");
    GradedBasis out;
    out.rank = n;
    out.mode = mode;
    out.by_degree.assign(2 * n - 1, {});
    out.zero_classes.assign(2 * n - 1, {});

    ClassMap layer;
    for (auto& c :
         mode == BasisMode::QUOTIENT ? cubic_no_cut(n, parallel) : oracle_cubic(n, false, parallel))
        layer.emplace(std::move(c.key), std::move(c.adj));

    for (int k = 2 * n - 2; k >= 2; --k) {
        // publish nonzero classes of this layer
        std::vector<const std::pair<const std::string, AdjacencyMatrix>*> items;
        items.reserve(layer.size());
        for (const auto& kv : layer) items.push_back(&kv);
        const int m = static_cast<int>(items.size());
        std::vector<char> zero(m, 0), cut(m, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int i = 0; i < m; ++i) {
            Multigraph g = from_adjacency(items[i]->second);
            zero[i] = is_zero(g) ? 1 : 0;
            if (mode == BasisMode::CUT_ONLY) cut[i] = cut_vertices(g).empty() ? 0 : 1;
        }
        for (int i = 0; i < m; ++i) {
            CanonicalGraph c{items[i]->second, items[i]->first};
            if (zero[i])
                out.zero_classes[k].push_back(std::move(c));
            else if (mode != BasisMode::CUT_ONLY || cut[i])
                out.by_degree[k].push_back(std::move(c));
        }
        if (k == 2) break;
        // contract to the next layer; zero classes still act as parents
        layer = expand_layer(layer, parallel, [mode](const Multigraph& g, ClassMap& next) {
            for (int e = 0; e < g.num_edges(); ++e) {
                if (g.is_loop(e)) continue;
                Multigraph gc = contract_edge(g, e);
                if (gc.has_loop()) continue;  // zero forever after
                if (mode == BasisMode::QUOTIENT && !cut_vertices(gc).empty()) continue;
                auto nf = normal_form(gc);
                next.emplace(std::move(nf.canon.key), std::move(nf.canon.adj));
            }
        });
    }
    return out;
}

std::vector<CanonicalGraph> basis(int n, int k, BasisMode mode) {
    if (n < 2 || k < 2 || k > 2 * n - 2) throw std::invalid_argument("degree out of range");
    return graded_basis(n, mode).at(k);
}

}  // namespace ghk
