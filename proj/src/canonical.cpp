#include "ghk/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

namespace ghk {

namespace {

VertexType vertex_type_from(const AdjacencyMatrix& a, int v) {
    for (int u = 0; u < a.n; ++u)
        if (u != v && a.at(v, u) >= 2) return VertexType::InMultiedge;
    for (int u = 0; u < a.n; ++u) {
        if (u == v || a.at(v, u) == 0) continue;
        for (int w = u + 1; w < a.n; ++w)
            if (w != v && a.at(v, w) > 0 && a.at(u, w) > 0) return VertexType::InTriangle;
    }
    return VertexType::Plain;
}

}  // namespace

VertexType vertex_type(const Multigraph& g, int v) {
    return vertex_type_from(g.to_adjacency(), v);
}

namespace {

struct BlockKey {
    int type, valence, loops;
    bool operator<(const BlockKey& o) const {
        return std::tie(type, valence, loops) < std::tie(o.type, o.valence, o.loops);
    }
    bool operator>(const BlockKey& o) const { return o < *this; }
    bool operator==(const BlockKey& o) const {
        return type == o.type && valence == o.valence && loops == o.loops;
    }
};

struct CanonSearch {
    const AdjacencyMatrix& adj;
    int n;
    std::vector<int> block_of_pos;      // position -> block id
    std::vector<std::vector<int>> blocks;  // block id -> member vertices
    std::vector<int> pos_of;            // vertex -> assigned position or -1
    std::vector<int> vtx_at;            // position -> vertex or -1
    std::vector<int> cur, best;         // serialized column-wise upper triangle
    bool have_best = false;
    bool want_all;
    std::vector<std::vector<int>> optimal;

    CanonSearch(const AdjacencyMatrix& a, bool want_all_)
        : adj(a), n(a.n), pos_of(a.n, -1), vtx_at(a.n, -1), want_all(want_all_) {}

    // Returns true if best was replaced somewhere in this subtree.
    bool dfs(int p, int offset, bool tight) {
        if (p == n) {
            if (!have_best || !tight) {
                best = cur;
                have_best = true;
                optimal.clear();
                optimal.push_back(pos_of);
                return true;
            }
            if (want_all || optimal.empty()) optimal.push_back(pos_of);
            return false;
        }
        int seglen = p + 1;
        std::vector<std::pair<std::vector<int>, int>> cands;
        for (int u : blocks[block_of_pos[p]]) {
            if (pos_of[u] >= 0) continue;
            std::vector<int> seg(seglen);
            for (int q = 0; q < p; ++q) seg[q] = adj.at(vtx_at[q], u);
            seg[p] = adj.at(u, u);
            cands.emplace_back(std::move(seg), u);
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        bool replaced = false;
        for (auto& [seg, u] : cands) {
            bool child_tight = false;
            if (have_best && tight) {
                int cmp = 0;
                for (int k = 0; k < seglen; ++k) {
                    if (seg[k] != best[offset + k]) {
                        cmp = seg[k] < best[offset + k] ? -1 : 1;
                        break;
                    }
                }
                if (cmp < 0) continue;
                child_tight = (cmp == 0);
            }
            pos_of[u] = p;
            vtx_at[p] = u;
            std::copy(seg.begin(), seg.end(), cur.begin() + offset);
            if (dfs(p + 1, offset + seglen, child_tight)) {
                replaced = true;
                tight = true;  // best now descends through this node
            }
            pos_of[u] = -1;
            vtx_at[p] = -1;
        }
        return replaced;
    }
};

}  // namespace

NormalFormResult normal_form_impl(const Multigraph& g, bool want_all) {
    if (!g.connected()) throw std::invalid_argument("normal_form requires a connected graph");
    AdjacencyMatrix a = g.to_adjacency();
    int n = a.n;

    std::vector<BlockKey> keys(n);
    for (int v = 0; v < n; ++v) {
        int loops = a.at(v, v);
        int val = 2 * loops;
        for (int u = 0; u < n; ++u)
            if (u != v) val += a.at(v, u);
        keys[v] = BlockKey{static_cast<int>(vertex_type_from(a, v)), val, loops};
    }
    std::map<BlockKey, std::vector<int>, std::greater<BlockKey>> by_key;
    for (int v = 0; v < n; ++v) by_key[keys[v]].push_back(v);

    CanonSearch search(a, want_all);
    for (auto& [k, members] : by_key) {
        int bid = static_cast<int>(search.blocks.size());
        for (std::size_t i = 0; i < members.size(); ++i) search.block_of_pos.push_back(bid);
        search.blocks.push_back(members);
    }
    search.cur.assign(n * (n + 1) / 2, 0);
    search.dfs(0, 0, false);

    NormalFormResult out;
    out.relabel = search.optimal.front();
    out.optimal_labelings = std::move(search.optimal);
    AdjacencyMatrix canon(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) canon.set(out.relabel[u], out.relabel[v], a.at(u, v));
    out.canon.key = canon.key();
    out.canon.adj = std::move(canon);
    return out;
}

NormalFormResult normal_form(const Multigraph& g) { return normal_form_impl(g, false); }

bool is_isomorphic(const Multigraph& g, const Multigraph& h) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    return normal_form(g).canon.key == normal_form(h).canon.key;
}

std::vector<std::vector<int>> vertex_automorphisms(const Multigraph& g) {
    NormalFormResult nf = normal_form_impl(g, true);
    const auto& labs = nf.optimal_labelings;
    std::vector<int> inv0(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) inv0[labs[0][v]] = v;
    std::vector<std::vector<int>> autos;
    autos.reserve(labs.size());
    for (const auto& lab : labs) {
        std::vector<int> sigma(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) sigma[v] = inv0[lab[v]];
        autos.push_back(std::move(sigma));
    }
    return autos;
}

namespace {

// Edge ids grouped by unordered endpoint pair.
std::map<std::pair<int, int>, std::vector<int>> edge_classes(const Multigraph& g) {
    std::map<std::pair<int, int>, std::vector<int>> cls;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.endpoint(e, 0), v = g.endpoint(e, 1);
        cls[{std::min(u, v), std::max(u, v)}].push_back(e);
    }
    return cls;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Multigraph& g, std::size_t max_count) {
    auto vautos = vertex_automorphisms(g);
    auto cls = edge_classes(g);

    std::size_t per_vauto = 1;
    for (auto& [pair, ids] : cls) {
        std::size_t f = 1;
        for (std::size_t k = 2; k <= ids.size(); ++k) f *= k;
        per_vauto *= f;
        if (pair.first == pair.second) per_vauto <<= ids.size();
        if (per_vauto > max_count) throw std::runtime_error("automorphism bound exceeded");
    }
    if (vautos.size() * per_vauto > max_count)
        throw std::runtime_error("automorphism bound exceeded");

    std::vector<std::vector<int>> out;
    std::vector<int> hmap(g.num_half_edges());
    for (const auto& sigma : vautos) {
        // Per edge class: every matching onto the image class, and for loops
        // both half-edge traversals.
        std::vector<const std::vector<int>*> src, dst;
        std::vector<std::vector<int>> perms;   // permutation state per class
        std::vector<int> loopflip;             // bitmask per loop class
        for (auto& [pair, ids] : cls) {
            auto img = std::make_pair(std::min(sigma[pair.first], sigma[pair.second]),
                                      std::max(sigma[pair.first], sigma[pair.second]));
            src.push_back(&ids);
            dst.push_back(&cls.at(img));
            std::vector<int> p(ids.size());
            std::iota(p.begin(), p.end(), 0);
            perms.push_back(std::move(p));
            loopflip.push_back(0);
        }
        // Odometer over (permutation, flips) choices of all classes.
        std::size_t nc = src.size();
        while (true) {
            for (std::size_t c = 0; c < nc; ++c) {
                const auto& s = *src[c];
                const auto& d = *dst[c];
                for (std::size_t k = 0; k < s.size(); ++k) {
                    int e = s[k], f = d[perms[c][k]];
                    int u0 = g.endpoint(e, 0);
                    bool loop = g.is_loop(e);
                    if (loop) {
                        bool flip = (loopflip[c] >> k) & 1;
                        hmap[2 * e] = 2 * f + (flip ? 1 : 0);
                        hmap[2 * e + 1] = 2 * f + (flip ? 0 : 1);
                    } else {
                        // half of e at u0 goes to half of f at sigma[u0]
                        int side = g.vertex_of(2 * f) == sigma[u0] ? 0 : 1;
                        hmap[2 * e] = 2 * f + side;
                        hmap[2 * e + 1] = 2 * f + (1 - side);
                    }
                }
            }
            out.push_back(hmap);
            // advance odometer
            std::size_t c = 0;
            for (; c < nc; ++c) {
                bool loop_class = g.is_loop((*src[c])[0]);
                if (loop_class && loopflip[c] + 1 < (1 << src[c]->size())) {
                    ++loopflip[c];
                    break;
                }
                loopflip[c] = 0;
                if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
            }
            if (c == nc) break;
        }
    }
    return out;
}

std::vector<int> witness_half_edge_map(const Multigraph& g, const NormalFormResult& nf) {
    Multigraph c = from_adjacency(nf.canon.adj);
    const auto& sigma = nf.relabel;
    auto ccls = edge_classes(c);
    std::map<std::pair<int, int>, std::size_t> used;
    std::vector<int> hmap(g.num_half_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.endpoint(e, 0), v = g.endpoint(e, 1);
        auto img = std::make_pair(std::min(sigma[u], sigma[v]), std::max(sigma[u], sigma[v]));
        int f = ccls.at(img)[used[img]++];
        if (u == v) {
            hmap[2 * e] = 2 * f;
            hmap[2 * e + 1] = 2 * f + 1;
        } else {
            int side = c.vertex_of(2 * f) == sigma[u] ? 0 : 1;
            hmap[2 * e] = 2 * f + side;
            hmap[2 * e + 1] = 2 * f + (1 - side);
        }
    }
    return hmap;
}

Multigraph canonical_graph(const CanonicalGraph& c) { return from_adjacency(c.adj); }

}  // namespace ghk
