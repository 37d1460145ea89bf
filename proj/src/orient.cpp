#include "ghk/orient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ghk {

namespace {

int perm_sign(std::vector<int> p) {
    int sign = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Spanning forest picking edges greedily in the given order; returns edge ids.
std::vector<int> spanning_forest(const Multigraph& g, const std::vector<int>& order) {
    UnionFind uf(g.num_vertices());
    std::vector<int> tree;
    for (int e : order)
        if (!g.is_loop(e) && uf.unite(g.endpoint(e, 0), g.endpoint(e, 1))) tree.push_back(e);
    return tree;
}

}  // namespace

int det_sign(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return prev > 0 ? sign : -sign;
}

Orientation reference_orientation(const Multigraph& g) {
    Orientation o;
    const int E = g.num_edges();
    o.edge_order.resize(E);
    std::iota(o.edge_order.begin(), o.edge_order.end(), 0);
    std::sort(o.edge_order.begin(), o.edge_order.end(), [&](int a, int b) {
        int au = std::min(g.endpoint(a, 0), g.endpoint(a, 1));
        int av = std::max(g.endpoint(a, 0), g.endpoint(a, 1));
        int bu = std::min(g.endpoint(b, 0), g.endpoint(b, 1));
        int bv = std::max(g.endpoint(b, 0), g.endpoint(b, 1));
        return std::tie(au, av, a) < std::tie(bu, bv, b);
    });
    o.tail.resize(E);
    for (int e = 0; e < E; ++e)
        o.tail[e] = g.vertex_of(2 * e + 1) < g.vertex_of(2 * e) ? 2 * e + 1 : 2 * e;

    std::vector<int> tree = spanning_forest(g, o.edge_order);
    std::vector<bool> in_tree(E, false);
    for (int e : tree) in_tree[e] = true;

    // Parent pointers by BFS from the smallest vertex of each component.
    const int V = g.num_vertices();
    std::vector<int> parent_edge(V, -1), depth(V, -1);
    for (int root = 0; root < V; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int h : g.half_edges_at(v)) {
                int e = Multigraph::edge_of(h);
                if (!in_tree[e]) continue;
                int w = g.vertex_of(Multigraph::partner(h));
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                }
            }
        }
    }
    auto other_end = [&](int e, int v) {
        return g.endpoint(e, 0) == v ? g.endpoint(e, 1) : g.endpoint(e, 0);
    };

    for (int f : o.edge_order) {
        if (in_tree[f]) continue;
        std::vector<int> cyc(E, 0);
        cyc[f] = 1;
        if (!g.is_loop(f)) {
            int t = g.vertex_of(o.tail[f]);
            int h = g.vertex_of(Multigraph::partner(o.tail[f]));
            // Walk both endpoints up to their meeting point, adding signed
            // tree-edge coordinates along the way (cycle runs f then h -> t).
            int x = h, y = t;
            while (x != y) {
                if (depth[x] >= depth[y]) {
                    int e = parent_edge[x];
                    int to = other_end(e, x);
                    // traversing e from x to its parent
                    cyc[e] += g.vertex_of(o.tail[e]) == x ? 1 : -1;
                    x = to;
                } else {
                    int e = parent_edge[y];
                    int to = other_end(e, y);
                    // traversing e from parent down to y, i.e. reversed
                    cyc[e] += g.vertex_of(o.tail[e]) == y ? -1 : 1;
                    y = to;
                }
            }
        }
        o.cycles.push_back(std::move(cyc));
    }
    return o;
}

namespace {

// Rows of m (E x r) forming an invertible r x r minor, by integer elimination.
std::vector<int> independent_rows(std::vector<std::vector<long long>> m, int r) {
    std::vector<int> rows;
    const int E = static_cast<int>(m.size());
    std::vector<bool> used(E, false);
    for (int col = 0; col < r; ++col) {
        int pick = -1;
        for (int i = 0; i < E; ++i)
            if (!used[i] && m[i][col] != 0) {
                pick = i;
                break;
            }
        if (pick < 0) throw std::runtime_error("cycle basis is singular");
        used[pick] = true;
        rows.push_back(pick);
        for (int i = 0; i < E; ++i) {
            if (used[i] || m[i][col] == 0) continue;
            long long a = m[pick][col], b = m[i][col];
            for (int j = col; j < r; ++j) m[i][j] = m[i][j] * a - m[pick][j] * b;
        }
    }
    return rows;
}

}  // namespace

int iso_sign(const Multigraph& a, const Orientation& oa, const Multigraph& b,
             const Orientation& ob, const std::vector<int>& hmap) {
    const int E = a.num_edges();
    if (b.num_edges() != E || static_cast<int>(hmap.size()) != 2 * E)
        throw std::invalid_argument("iso_sign: size mismatch");
    if (oa.cycles.size() != ob.cycles.size())
        throw std::invalid_argument("iso_sign: H1 dimension mismatch");

    std::vector<int> pos_b(E);
    for (int i = 0; i < E; ++i) pos_b[ob.edge_order[i]] = i;
    std::vector<int> perm(E);
    for (int i = 0; i < E; ++i)
        perm[i] = pos_b[Multigraph::edge_of(hmap[2 * oa.edge_order[i]])];
    int sign = perm_sign(std::move(perm));

    const int r = static_cast<int>(oa.cycles.size());
    if (r == 0) return sign;

    // Images of a's cycles in b's edge coordinates.
    std::vector<std::vector<long long>> img(E, std::vector<long long>(r, 0));
    std::vector<std::vector<long long>> bas(E, std::vector<long long>(r, 0));
    for (int k = 0; k < r; ++k) {
        for (int e = 0; e < E; ++e) {
            int c = oa.cycles[k][e];
            if (c == 0) continue;
            int f = Multigraph::edge_of(hmap[oa.tail[e]]);
            int d = hmap[oa.tail[e]] == ob.tail[f] ? 1 : -1;
            img[f][k] += static_cast<long long>(c) * d;
        }
        for (int e = 0; e < E; ++e) bas[e][k] = ob.cycles[k][e];
    }
    std::vector<int> rows = independent_rows(bas, r);
    std::vector<std::vector<long long>> bsel(r, std::vector<long long>(r)),
        isel(r, std::vector<long long>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            bsel[i][j] = ob.cycles[j][rows[i]];
            isel[i][j] = img[rows[i]][j];
        }
    int db = det_sign(std::move(bsel));
    int di = det_sign(std::move(isel));
    if (di == 0) throw std::invalid_argument("iso_sign: map is singular on H1");
    return sign * db * di;
}

int vertex_model_sign(const Multigraph& g, const Orientation& o) {
    const int E = g.num_edges();
    const int V = g.num_vertices();
    std::vector<int> id_order(E);
    std::iota(id_order.begin(), id_order.end(), 0);
    std::vector<int> inv(E);
    for (int i = 0; i < E; ++i) inv[i] = o.edge_order[i];
    int a_sign = perm_sign(inv);

    std::vector<int> tree = spanning_forest(g, id_order);
    const int r = static_cast<int>(o.cycles.size());
    const int m = static_cast<int>(tree.size());
    if (r + m != E) throw std::invalid_argument("vertex_model_sign: cycle count mismatch");

    // det over C1 of (cycles, tree edges) against the intrinsic edge basis.
    std::vector<std::vector<long long>> m1(E, std::vector<long long>(E, 0));
    for (int k = 0; k < r; ++k)
        for (int e = 0; e < E; ++e) {
            int c = o.cycles[k][e];
            if (c != 0) m1[e][k] = o.tail[e] == 2 * e ? c : -c;
        }
    for (int j = 0; j < m; ++j) m1[tree[j]][r + j] = 1;
    int d1 = det_sign(std::move(m1));

    // det over C0 of (boundaries of tree edges, one unit vector per component).
    std::vector<std::vector<long long>> m0(V, std::vector<long long>(V, 0));
    for (int j = 0; j < m; ++j) {
        int e = tree[j];
        m0[g.vertex_of(2 * e + 1)][j] += 1;
        m0[g.vertex_of(2 * e)][j] -= 1;
    }
    std::vector<int> comp = g.component_labels();
    int c = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> rep(c, -1);
    for (int v = V - 1; v >= 0; --v) rep[comp[v]] = v;
    for (int i = 0; i < c; ++i) m0[rep[i]][m + i] = 1;
    int d0 = det_sign(std::move(m0));

    if (d1 == 0 || d0 == 0) throw std::runtime_error("vertex_model_sign: degenerate bases");
    return a_sign * d1 * d0;
}

int iso_sign_vertex_model(const Multigraph& a, const Orientation& oa, const Multigraph& b,
                          const Orientation& ob, const std::vector<int>& hmap) {
    const int E = a.num_edges();
    const int V = a.num_vertices();
    std::vector<int> vmap(V, -1);
    for (int h = 0; h < 2 * E; ++h) vmap[a.vertex_of(h)] = b.vertex_of(hmap[h]);
    for (int v = 0; v < V; ++v)
        if (vmap[v] < 0) throw std::invalid_argument("isolated vertex");
    int vsign = perm_sign(vmap);

    int reversals = 0;
    for (int e = 0; e < E; ++e)
        if (hmap[2 * e] & 1) ++reversals;

    std::vector<int> comp_a = a.component_labels(), comp_b = b.component_labels();
    int c = comp_a.empty() ? 0 : *std::max_element(comp_a.begin(), comp_a.end()) + 1;
    std::vector<int> cperm(c);
    for (int v = 0; v < V; ++v) cperm[comp_a[v]] = comp_b[vmap[v]];
    int csign = perm_sign(std::move(cperm));

    int n = vertex_model_sign(a, oa) * vertex_model_sign(b, ob);
    return n * vsign * (reversals % 2 ? -1 : 1) * csign;
}

namespace {

std::vector<int> identity_hmap(int half_edges) {
    std::vector<int> h(half_edges);
    std::iota(h.begin(), h.end(), 0);
    return h;
}

}  // namespace

bool is_zero(const Multigraph& g) {
    if (g.has_loop()) return true;
    Orientation ref = reference_orientation(g);

    // Transposition generators within parallel classes.
    std::map<std::pair<int, int>, std::vector<int>> cls;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.endpoint(e, 0), v = g.endpoint(e, 1);
        cls[{std::min(u, v), std::max(u, v)}].push_back(e);
    }
    for (auto& [pair, ids] : cls) {
        if (ids.size() < 2) continue;
        auto hmap = identity_hmap(g.num_half_edges());
        int e = ids[0], f = ids[1];
        int side = g.vertex_of(2 * f) == g.vertex_of(2 * e) ? 0 : 1;
        hmap[2 * e] = 2 * f + side;
        hmap[2 * e + 1] = 2 * f + 1 - side;
        hmap[2 * f + side] = 2 * e;
        hmap[2 * f + 1 - side] = 2 * e + 1;
        if (iso_sign(g, ref, g, ref, hmap) < 0) return true;
    }

    // One lift per vertex automorphism (parallel edges matched in id order).
    for (const auto& sigma : vertex_automorphisms(g)) {
        auto hmap = identity_hmap(g.num_half_edges());
        std::map<std::pair<int, int>, std::size_t> used;
        for (int e = 0; e < g.num_edges(); ++e) {
            int u = g.endpoint(e, 0), v = g.endpoint(e, 1);
            auto img = std::make_pair(std::min(sigma[u], sigma[v]),
                                      std::max(sigma[u], sigma[v]));
            int f = cls.at(img)[used[img]++];
            int side = g.vertex_of(2 * f) == sigma[u] ? 0 : 1;
            hmap[2 * e] = 2 * f + side;
            hmap[2 * e + 1] = 2 * f + 1 - side;
        }
        if (iso_sign(g, ref, g, ref, hmap) < 0) return true;
    }
    return false;
}

SignedCanonical reduce_to_canonical(const Multigraph& g, const Orientation& o,
                                    bool check_zero) {
    if (g.has_loop()) return {};
    NormalFormResult nf = normal_form(g);
    Multigraph canon = from_adjacency(nf.canon.adj);
    if (check_zero && is_zero(canon)) return {};
    std::vector<int> hmap = witness_half_edge_map(g, nf);
    int sign = iso_sign(g, o, canon, reference_orientation(canon), hmap);
    return {std::move(nf.canon), sign};
}

Orientation contracted_orientation(const Multigraph& g, const Orientation& o, int e) {
    Orientation out;
    auto new_edge = [e](int f) { return f < e ? f : f - 1; };
    for (int f : o.edge_order)
        if (f != e) out.edge_order.push_back(new_edge(f));
    out.tail.resize(g.num_edges() - 1);
    for (int f = 0; f < g.num_edges(); ++f)
        if (f != e) out.tail[new_edge(f)] = 2 * new_edge(f) + (o.tail[f] & 1);
    for (const auto& cyc : o.cycles) {
        std::vector<int> c(g.num_edges() - 1, 0);
        for (int f = 0; f < g.num_edges(); ++f)
            if (f != e) c[new_edge(f)] = cyc[f];
        out.cycles.push_back(std::move(c));
    }
    return out;
}

SignedCanonical signed_contract(const Multigraph& g, const Orientation& o, int e,
                                bool check_zero) {
    if (g.is_loop(e)) throw std::invalid_argument("signed_contract: e is a loop");
    Multigraph gc = contract_edge(g, e);
    if (gc.has_loop()) return {};
    Orientation oc = contracted_orientation(g, o, e);
    int pos = static_cast<int>(std::find(o.edge_order.begin(), o.edge_order.end(), e) -
                               o.edge_order.begin());
    SignedCanonical red = reduce_to_canonical(gc, oc, check_zero);
    if (red.sign == 0) return red;
    red.sign *= pos % 2 == 0 ? 1 : -1;  // (-1)^(i-1), i = pos + 1
    return red;
}

}  // namespace ghk
