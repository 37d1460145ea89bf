#include "ghk/bialgebra.hpp"

#include <algorithm>
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

struct SurgeryParts {
    Multigraph result;
    std::vector<int> vmap;  // input vertex -> result vertex
    int vx = 0, vy = 0;     // endpoints merged by the glued edge
    bool merged = false;
};

SurgeryParts build_surgery(const Multigraph& g, int x, int y) {
    const int E = g.num_edges(), V = g.num_vertices();
    if (x < 0 || y < 0 || x >= 2 * E || y >= 2 * E)
        throw std::invalid_argument("contract_half_edges: half-edge out of range");
    if (x == y || y == Multigraph::partner(x))
        throw std::invalid_argument("contract_half_edges: x and y must span distinct edges");
    const int ex = Multigraph::edge_of(x), ey = Multigraph::edge_of(y);
    SurgeryParts p;
    p.vx = g.vertex_of(x);
    p.vy = g.vertex_of(y);
    p.merged = p.vx != p.vy;
    p.vmap.resize(V);
    if (p.merged) {
        int keep = std::min(p.vx, p.vy), drop = std::max(p.vx, p.vy);
        for (int v = 0; v < V; ++v) p.vmap[v] = v == drop ? keep : (v > drop ? v - 1 : v);
    } else {
        std::iota(p.vmap.begin(), p.vmap.end(), 0);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(E - 1);
    for (int e = 0; e < E; ++e) {
        if (e == ex || e == ey) continue;
        edges.push_back({p.vmap[g.vertex_of(2 * e)], p.vmap[g.vertex_of(2 * e + 1)]});
    }
    edges.push_back({p.vmap[g.vertex_of(Multigraph::partner(x))],
                     p.vmap[g.vertex_of(Multigraph::partner(y))]});
    p.result = Multigraph(p.merged ? V - 1 : V, std::move(edges));
    return p;
}

// Vertex-space comparison of (merge kernel, lifted result vertices) against
// the vertex basis of g; +1 when no merge happens.
int c0_sign(const Multigraph& g, const SurgeryParts& p) {
    if (!p.merged) return 1;
    const int V = g.num_vertices();
    std::vector<std::vector<long long>> m(V, std::vector<long long>(V, 0));
    m[p.vy][0] += 1;
    m[p.vx][0] -= 1;
    std::vector<int> pre(V - 1, -1);
    for (int v = V - 1; v >= 0; --v) pre[p.vmap[v]] = v;
    for (int w = 0; w < V - 1; ++w) m[pre[w]][1 + w] = 1;
    return det_sign(std::move(m));
}

// Component-space comparison, by case on how the component count changes.
int h0_sign(const Multigraph& g, const SurgeryParts& p, const BialgebraSigns& signs) {
    std::vector<int> cg = g.component_labels();
    std::vector<int> cr = p.result.component_labels();
    const int V = g.num_vertices();
    int ncg = cg.empty() ? 0 : *std::max_element(cg.begin(), cg.end()) + 1;
    int ncr = cr.empty() ? 0 : *std::max_element(cr.begin(), cr.end()) + 1;

    if (ncr == ncg - 1) {
        // kernel [comp(x)] - [comp(y)] first, then one lift per result comp
        std::vector<std::vector<long long>> m(ncg, std::vector<long long>(ncg, 0));
        int ks = signs.h0_reverse ? -1 : 1;
        m[cg[p.vx]][0] += ks;
        m[cg[p.vy]][0] -= ks;
        std::vector<int> lift(ncr, -1);  // result comp -> some preimage comp
        for (int v = 0; v < V; ++v) {
            int j = cr[p.vmap[v]];
            if (lift[j] < 0 || cg[v] < lift[j]) lift[j] = cg[v];
        }
        for (int j = 0; j < ncr; ++j) m[lift[j]][1 + j] = 1;
        return det_sign(std::move(m));
    }
    if (ncr == ncg) {
        std::vector<int> perm(ncg, -1);
        for (int v = 0; v < V; ++v) perm[cg[v]] = cr[p.vmap[v]];
        return perm_sign(std::move(perm));
    }
    if (ncr == ncg + 1) {
        // One input component splits in two; order the pair with the
        // component of the merged (or shared) vertex first.
        int split = cg[p.vx];
        int first = cr[p.vmap[p.vx]];
        int second = -1;
        for (int v = 0; v < V; ++v)
            if (cg[v] == split && cr[p.vmap[v]] != first) second = cr[p.vmap[v]];
        if (second < 0) throw std::logic_error("h0_sign: split component not found");
        std::vector<int> order;
        for (int i = 0; i < ncg; ++i) {
            if (i == split) {
                order.push_back(first);
                order.push_back(second);
            } else {
                int img = -1;
                for (int v = 0; v < V && img < 0; ++v)
                    if (cg[v] == i) img = cr[p.vmap[v]];
                order.push_back(img);
            }
        }
        return perm_sign(std::move(order));
    }
    throw std::logic_error("h0_sign: component count changed by more than one");
}

Orientation union_orientation(const Multigraph& a, const Orientation& oa,
                              const Multigraph& b, const Orientation& ob) {
    const int Ea = a.num_edges(), Eb = b.num_edges();
    Orientation o;
    o.edge_order = oa.edge_order;
    for (int f : ob.edge_order) o.edge_order.push_back(f + Ea);
    o.tail = oa.tail;
    for (int t : ob.tail) o.tail.push_back(t + 2 * Ea);
    for (const auto& cyc : oa.cycles) {
        std::vector<int> c(Ea + Eb, 0);
        std::copy(cyc.begin(), cyc.end(), c.begin());
        o.cycles.push_back(std::move(c));
    }
    for (const auto& cyc : ob.cycles) {
        std::vector<int> c(Ea + Eb, 0);
        std::copy(cyc.begin(), cyc.end(), c.begin() + Ea);
        o.cycles.push_back(std::move(c));
    }
    return o;
}

// Component comp of r as a standalone graph: vertices relabeled ascending,
// edges kept in id order.
Multigraph component_graph(const Multigraph& r, const std::vector<int>& labels, int comp) {
    std::vector<int> newid(r.num_vertices(), -1);
    int n = 0;
    for (int v = 0; v < r.num_vertices(); ++v)
        if (labels[v] == comp) newid[v] = n++;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < r.num_edges(); ++e) {
        int u = r.vertex_of(2 * e), v = r.vertex_of(2 * e + 1);
        if (labels[u] != comp) continue;
        edges.push_back({newid[u], newid[v]});
    }
    return Multigraph(n, std::move(edges));
}

int mono_sign(unsigned mask, int bit0, int bit1, int bit2, int bit3 = 0) {
    int e = 0;
    if (mask & 1u) e += bit0;
    if (mask & 2u) e += bit1;
    if (mask & 4u) e += bit2;
    if (mask & 8u) e += bit3;
    return e % 2 == 0 ? 1 : -1;
}

const CanonicalGraph& lookup(BasisCache& cache, int rank, int degree, const std::string& key) {
    const ChainComplex& cx = cache.at(rank);
    int idx = cx.index_of(degree, key);
    if (idx < 0) throw std::logic_error("tensor factor missing from quotient basis");
    return cx.basisset().at(degree)[idx];
}

}  // namespace

Multigraph contract_half_edges(const Multigraph& g, int x, int y) {
    return build_surgery(g, x, y).result;
}

OrientedSurgery contract_half_edges_oriented(const Multigraph& g, const Orientation& o,
                                             int x, int y, const BialgebraSigns& signs) {
    SurgeryParts p = build_surgery(g, x, y);
    const int V = g.num_vertices(), E = g.num_edges();
    int dx = x == 2 * Multigraph::edge_of(x) ? 1 : -1;
    int dy = y == 2 * Multigraph::edge_of(y) ? 1 : -1;
    int par = (V + E + 1) % 2 == 0 ? 1 : -1;
    int s = vertex_model_sign(g, o) * dx * dy * par * c0_sign(g, p) * h0_sign(g, p, signs);
    if (!p.merged) s *= signs.loop_case;
    return {std::move(p.result), s, std::move(p.vmap)};
}

std::vector<std::pair<int, int>> separating_pairs(const Multigraph& g) {
    std::vector<std::pair<int, int>> out;
    const int H = g.num_half_edges();
    const int comps = g.num_components();
    for (int x = 0; x < H; ++x)
        for (int y = x + 1; y < H; ++y) {
            if (Multigraph::edge_of(x) == Multigraph::edge_of(y)) continue;
            if (build_surgery(g, x, y).result.num_components() > comps)
                out.push_back({x, y});
        }
    return out;
}

SignedCanonical reduce_from_omega(const Multigraph& g) {
    if (g.has_loop()) return {};
    Orientation ref = reference_orientation(g);
    SignedCanonical red = reduce_to_canonical(g, ref);
    if (red.sign == 0) return red;
    red.sign *= vertex_model_sign(g, ref);
    return red;
}

void TensorChain::add(const TensorKey& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) entries.erase(it);
    }
}

TensorChain& TensorChain::operator+=(const TensorChain& o) {
    for (const auto& [k, c] : o.entries) add(k, c);
    return *this;
}

TensorChain TensorChain::operator*(const Rational& c) const {
    TensorChain out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : entries) out.entries.emplace(k, v * c);
    return out;
}

ChainVector bracket(const CanonicalGraph& g, const CanonicalGraph& h, BasisCache& cache,
                    const BialgebraSigns& signs) {
    Multigraph G = canonical_graph(g), H = canonical_graph(h);
    if (!cut_vertices(G).empty() || !cut_vertices(H).empty())
        throw std::invalid_argument("bracket: operands must be cut-vertex-free");
    const int n = fundamental_rank(G) + fundamental_rank(H) - 1;
    const int deg = G.num_vertices() + H.num_vertices() - 1;
    const ChainComplex& cx = cache.at(n);

    Multigraph U = disjoint_union(G, H);
    Orientation oU =
        union_orientation(G, reference_orientation(G), H, reference_orientation(H));
    ChainVector out;
    out.rank = n;
    out.degree = deg;
    out.mode = cx.mode();

    const int HG = G.num_half_edges(), HH = H.num_half_edges();
    for (int x = 0; x < HG; ++x)
        for (int y = 0; y < HH; ++y) {
            OrientedSurgery os = contract_half_edges_oriented(U, oU, x, HG + y, signs);
            if (os.result.has_loop()) continue;
            if (!os.result.connected())
                throw std::logic_error("bracket: disconnected term");
            SignedCanonical red = reduce_from_omega(os.result);
            if (red.sign == 0) continue;
            if (!cut_vertices(os.result).empty())
                throw std::logic_error("bracket: term with a cut vertex");
            int idx = cx.index_of(deg, red.canon.key);
            if (idx < 0) throw std::logic_error("bracket: nonzero term missing from basis");
            out.add(idx, Rational(os.sign * red.sign));
        }
    return out;
}

TensorChain cobracket(const CanonicalGraph& g, BasisCache& cache,
                      const BialgebraSigns& signs) {
    Multigraph G = canonical_graph(g);
    if (!cut_vertices(G).empty())
        throw std::invalid_argument("cobracket: operand must be cut-vertex-free");
    Orientation ref = reference_orientation(G);

    TensorChain out;
    for (auto [x, y] : separating_pairs(G)) {
        OrientedSurgery os = contract_half_edges_oriented(G, ref, x, y, signs);
        const Multigraph& r = os.result;
        if (r.has_loop()) continue;
        std::vector<int> labels = r.component_labels();
        if (r.num_components() != 2)
            throw std::logic_error("cobracket: separating pair did not split in two");

        // A is the factor containing the merged vertex; the surgery sign was
        // computed for the min-vertex component order, so converting to the
        // (A, B) order costs a swap when A is not the first component.
        int acomp = labels[os.vmap[G.vertex_of(x)]];
        int s = os.sign * (acomp == 0 ? 1 : -1);

        // Vertex shuffle from result order to (A vertices, B vertices).
        std::vector<int> shuffle(r.num_vertices());
        int pos = 0;
        for (int v = 0; v < r.num_vertices(); ++v)
            if (labels[v] == acomp) shuffle[v] = pos++;
        for (int v = 0; v < r.num_vertices(); ++v)
            if (labels[v] != acomp) shuffle[v] = pos++;
        s *= perm_sign(shuffle);

        Multigraph A = component_graph(r, labels, acomp);
        Multigraph B = component_graph(r, labels, 1 - acomp);
        if (!A.connected() || !B.connected())
            throw std::logic_error("cobracket: factor not connected");
        if (!cut_vertices(A).empty() || !cut_vertices(B).empty()) continue;
        SignedCanonical ra = reduce_from_omega(A);
        if (ra.sign == 0) continue;
        SignedCanonical rb = reduce_from_omega(B);
        if (rb.sign == 0) continue;

        const int va = A.num_vertices(), vb = B.num_vertices();
        s *= mono_sign(signs.split_mask, va * vb, va, vb);
        int c = s * ra.sign * rb.sign;
        TensorKey ab{fundamental_rank(A), va, ra.canon.key,
                     fundamental_rank(B), vb, rb.canon.key};
        TensorKey ba{ab.rank_b, ab.deg_b, ab.key_b, ab.rank_a, ab.deg_a, ab.key_a};
        out.add(ab, Rational(c));
        int mirror = mono_sign(signs.swap_mask, va * vb, vb, 1) * (va % 2 == 0 ? 1 : -1);
        out.add(ba, Rational(c * mirror));
    }
    return out;
}

TensorChain cobracket_chain(const ChainVector& v, BasisCache& cache,
                            const BialgebraSigns& signs) {
    TensorChain out;
    const ChainComplex& cx = cache.at(v.rank);
    for (const auto& [idx, c] : v.entries)
        out += cobracket(cx.basisset().at(v.degree)[idx], cache, signs) * c;
    return out;
}

TensorChain bracket_tensor_left(const TensorChain& t, const CanonicalGraph& h,
                                BasisCache& cache, const BialgebraSigns& signs) {
    Multigraph H = canonical_graph(h);
    const int vh = H.num_vertices();
    TensorChain out;
    for (const auto& [k, c] : t.entries) {
        const CanonicalGraph& A = lookup(cache, k.rank_a, k.deg_a, k.key_a);
        const CanonicalGraph& B = lookup(cache, k.rank_b, k.deg_b, k.key_b);

        ChainVector ah = bracket(A, h, cache, signs);
        const ChainComplex& cxa = cache.at(ah.rank);
        for (const auto& [j, cj] : ah.entries)
            out.add({ah.rank, ah.degree, cxa.basisset().at(ah.degree)[j].key, k.rank_b,
                     k.deg_b, k.key_b},
                    c * cj);

        int eps = mono_sign(signs.extl_mask, k.deg_a * vh, k.deg_a, vh, 1);
        ChainVector bh = bracket(B, h, cache, signs);
        const ChainComplex& cxb = cache.at(bh.rank);
        for (const auto& [j, cj] : bh.entries)
            out.add({k.rank_a, k.deg_a, k.key_a, bh.rank, bh.degree,
                     cxb.basisset().at(bh.degree)[j].key},
                    c * cj * Rational(eps));
    }
    return out;
}

TensorChain bracket_tensor_right(const CanonicalGraph& g, const TensorChain& t,
                                 BasisCache& cache, const BialgebraSigns& signs) {
    Multigraph G = canonical_graph(g);
    const int vg = G.num_vertices();
    TensorChain out;
    for (const auto& [k, c] : t.entries) {
        const CanonicalGraph& A = lookup(cache, k.rank_a, k.deg_a, k.key_a);
        const CanonicalGraph& B = lookup(cache, k.rank_b, k.deg_b, k.key_b);

        ChainVector ga = bracket(g, A, cache, signs);
        const ChainComplex& cxa = cache.at(ga.rank);
        for (const auto& [j, cj] : ga.entries)
            out.add({ga.rank, ga.degree, cxa.basisset().at(ga.degree)[j].key, k.rank_b,
                     k.deg_b, k.key_b},
                    c * cj);

        int eps = mono_sign(signs.extr_mask, vg * k.deg_a, vg, k.deg_a, 1);
        ChainVector gb = bracket(g, B, cache, signs);
        const ChainComplex& cxb = cache.at(gb.rank);
        for (const auto& [j, cj] : gb.entries)
            out.add({k.rank_a, k.deg_a, k.key_a, gb.rank, gb.degree,
                     cxb.basisset().at(gb.degree)[j].key},
                    c * cj * Rational(eps));
    }
    return out;
}

TensorChain compatibility_defect(const CanonicalGraph& g, const CanonicalGraph& h,
                                 BasisCache& cache, const BialgebraSigns& signs) {
    TensorChain d = cobracket_chain(bracket(g, h, cache, signs), cache, signs);
    d += bracket_tensor_left(cobracket(g, cache, signs), h, cache, signs);
    int vg = canonical_graph(g).num_vertices();
    int s = vg % 2 == 0 ? 1 : -1;
    d += bracket_tensor_right(g, cobracket(h, cache, signs), cache, signs) * Rational(s);
    return d;
}

}  // namespace ghk
