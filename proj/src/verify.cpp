#include "ghk/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ghk/canonical.hpp"
#include "ghk/enumerate.hpp"
#include "ghk/orient.hpp"

namespace ghk {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

// Everything about one cut vertex needed to blow it up.
struct CutData {
    int v = 0;
    int l = 0;                                 // components of g minus v
    std::vector<int> he_comp;                  // half-edge at v -> component
    std::vector<std::vector<int>> parts;       // normalized 2-block partitions
    std::vector<std::vector<int>> families;    // pairwise-compatible index sets
};

CutData cut_data(const Multigraph& g, int v, int max_components) {
    CutData cd;
    cd.v = v;
    const int V = g.num_vertices();
    std::vector<int> label(V, -1);
    int l = 0;
    for (int s = 0; s < V; ++s) {
        if (s == v || label[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        label[s] = l;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int h : g.half_edges_at(u)) {
                int w = g.vertex_of(Multigraph::partner(h));
                if (w != v && label[w] < 0) {
                    label[w] = l;
                    q.push(w);
                }
            }
        }
        ++l;
    }
    cd.l = l;
    if (l < 2) throw std::logic_error("cut_data: vertex is not a cut vertex");
    if (l > max_components)
        throw std::invalid_argument("blowup_complex: too many components at a cut vertex");
    cd.he_comp.assign(g.num_half_edges(), -1);
    for (int h : g.half_edges_at(v)) cd.he_comp[h] = label[g.vertex_of(Multigraph::partner(h))];
    cd.parts = two_block_partitions(l);
    // Cone incidence check: the partition separating the first component from
    // the rest (normalized block {1, ..., l-1}) is compatible with everything.
    std::vector<int> cone(l - 1);
    for (int c = 1; c < l; ++c) cone[c - 1] = c;
    if (std::find(cd.parts.begin(), cd.parts.end(), cone) == cd.parts.end())
        throw std::logic_error("cut_data: cone partition missing");
    for (const auto& p : cd.parts)
        if (!partitions_compatible(cone, p))
            throw std::logic_error("cut_data: cone partition incompatible");
    // All pairwise-compatible subsets, the empty set included.
    std::vector<int> chosen;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        cd.families.push_back(chosen);
        for (std::size_t i = from; i < cd.parts.size(); ++i) {
            bool ok = true;
            for (int j : chosen)
                if (!partitions_compatible(cd.parts[i], cd.parts[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(static_cast<int>(i));
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    return cd;
}

// Blow up every cut vertex of g along the chosen laminar partition sets: the
// nesting order of each set is a tree of new vertices hanging off the cut
// vertex, and each half-edge moves to the vertex of the smallest chosen block
// containing its component.
Multigraph build_blowup(const Multigraph& g, const std::vector<CutData>& cuts,
                        const std::vector<const std::vector<int>*>& choice) {
    int V = g.num_vertices();
    std::vector<int> he_vert(g.num_half_edges());
    for (int h = 0; h < g.num_half_edges(); ++h) he_vert[h] = g.vertex_of(h);
    std::vector<std::pair<int, int>> tree_edges;
    for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
        const CutData& cd = cuts[ci];
        const std::vector<int>& fam = *choice[ci];
        const int m = static_cast<int>(fam.size());
        std::vector<int> node(m);
        for (int i = 0; i < m; ++i) node[i] = V++;
        for (int i = 0; i < m; ++i) {
            const std::vector<int>& si = cd.parts[fam[i]];
            int parent = cd.v;
            std::size_t best = static_cast<std::size_t>(-1);
            for (int j = 0; j < m; ++j) {
                const std::vector<int>& sj = cd.parts[fam[j]];
                if (j == i || sj.size() <= si.size()) continue;
                if (subset_of(si, sj) && sj.size() < best) {
                    best = sj.size();
                    parent = node[j];
                }
            }
            tree_edges.emplace_back(node[i], parent);
        }
        for (int h : g.half_edges_at(cd.v)) {
            int c = cd.he_comp[h];
            int target = cd.v;
            std::size_t best = static_cast<std::size_t>(-1);
            for (int i = 0; i < m; ++i) {
                const std::vector<int>& s = cd.parts[fam[i]];
                if (std::binary_search(s.begin(), s.end(), c) && s.size() < best) {
                    best = s.size();
                    target = node[i];
                }
            }
            he_vert[h] = target;
        }
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.num_edges() + tree_edges.size());
    for (int e = 0; e < g.num_edges(); ++e) edges.emplace_back(he_vert[2 * e], he_vert[2 * e + 1]);
    edges.insert(edges.end(), tree_edges.begin(), tree_edges.end());
    return Multigraph(V, std::move(edges));
}

std::string betti_summary(const HomologyTable& t) {
    std::ostringstream os;
    os << "betti(deg " << (t.rows.empty() ? 0 : t.rows.front().degree) << " down)=";
    for (std::size_t i = 0; i < t.rows.size(); ++i) os << (i ? "," : "") << t.rows[i].betti;
    return os.str();
}

}  // namespace

std::vector<std::vector<int>> two_block_partitions(int l) {
    if (l < 2) throw std::invalid_argument("two_block_partitions: need at least 2 components");
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << (l - 1)); ++mask) {
        std::vector<int> s;
        for (int c = 1; c < l; ++c)
            if (mask & (1u << (c - 1))) s.push_back(c);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool partitions_compatible(const std::vector<int>& a, const std::vector<int>& b) {
    return subset_of(a, b) || subset_of(b, a) || disjoint(a, b);
}

int BlowupComplex::index_of(int k, const std::string& key) const {
    if (k < 0 || k > max_degree()) return -1;
    const auto& v = basis_[k];
    auto it = std::lower_bound(v.begin(), v.end(), key,
                               [](const CanonicalGraph& c, const std::string& s) { return c.key < s; });
    if (it == v.end() || it->key != key) return -1;
    return static_cast<int>(it - v.begin());
}

BoundaryMatrix BlowupComplex::boundary(int k) const {
    if (k < 1 || k > max_degree()) throw std::invalid_argument("BlowupComplex::boundary: degree");
    BoundaryMatrix m;
    m.rows = dim(k - 1);
    m.cols = dim(k);
    for (int col = 0; col < m.cols; ++col) {
        const Multigraph mg = canonical_graph(basis_[k][col]);
        const Orientation o = reference_orientation(mg);
        const std::vector<int> br = bridges(mg);
        if (static_cast<int>(br.size()) != k)
            throw std::logic_error("BlowupComplex::boundary: bridge count != degree");
        std::map<int, long long> column;
        for (int e : br) {
            SignedCanonical sc = signed_contract(mg, o, e);
            if (sc.sign == 0) continue;
            int row = index_of(k - 1, sc.canon.key);
            if (row < 0) throw std::logic_error("BlowupComplex::boundary: term outside basis");
            column[row] += sc.sign;
        }
        for (const auto& [row, val] : column)
            if (val != 0) m.entries.push_back({row, col, val});
    }
    return m;
}

BlowupComplex blowup_complex(const Multigraph& g, int max_components) {
    if (!g.connected()) throw std::invalid_argument("blowup_complex: graph must be connected");
    if (g.has_loop()) throw std::invalid_argument("blowup_complex: graph must be loopless");
    if (!bridges(g).empty()) throw std::invalid_argument("blowup_complex: graph must be bridgeless");
    const std::vector<int> cv = cut_vertices(g);
    if (cv.empty()) throw std::invalid_argument("blowup_complex: graph has no cut vertex");

    BlowupComplex bc;
    bc.base_ = g;
    bc.cut_verts_ = cv;
    std::vector<CutData> cuts;
    int max_deg = 0;
    for (int v : cv) {
        cuts.push_back(cut_data(g, v, max_components));
        bc.partitions_.push_back(cuts.back().parts);
        max_deg += static_cast<int>(cuts.back().parts.size());
    }
    bc.families_.assign(max_deg + 1, 0);
    std::vector<std::map<std::string, CanonicalGraph>> collected(max_deg + 1);

    std::vector<const std::vector<int>*> choice(cuts.size());
    auto product = [&](auto&& self, std::size_t ci, int degree) -> void {
        if (ci == cuts.size()) {
            ++bc.families_[degree];
            Multigraph h = build_blowup(g, cuts, choice);
            SignedCanonical sc = reduce_to_canonical(h, reference_orientation(h));
            if (sc.sign != 0) collected[degree].emplace(sc.canon.key, sc.canon);
            return;
        }
        for (const auto& fam : cuts[ci].families) {
            choice[ci] = &fam;
            self(self, ci + 1, degree + static_cast<int>(fam.size()));
        }
    };
    product(product, 0, 0);

    int top = max_deg;
    while (top > 0 && collected[top].empty() && bc.families_[top] == 0) --top;
    bc.basis_.resize(top + 1);
    bc.families_.resize(top + 1);
    for (int k = 0; k <= top; ++k)
        for (const auto& [key, c] : collected[k]) bc.basis_[k].push_back(c);
    return bc;
}

HomologyTable homology_table(int n, BasisMode mode, const RankOptions& opt) {
    ChainComplex cc(graded_basis(n, mode, opt.parallel));
    std::vector<long long> dims(2 * n - 1, 0), ranks(2 * n - 1, 0);
    for (int k = 2; k <= 2 * n - 2; ++k) dims[k] = cc.dim(k);
    for (int k = 3; k <= 2 * n - 2; ++k)
        ranks[k] = rank_exact(cc.boundary_matrix(k, EdgeFilter::ALL, opt.parallel), opt);
    return betti(n, mode, dims, ranks);
}

VerifyReport verify_rg_acyclic(const Multigraph& g) {
    VerifyReport r;
    r.check = "rg";
    const BlowupComplex bc = blowup_complex(g);
    const int top = bc.max_degree();
    std::vector<BoundaryMatrix> d(top + 1);
    for (int k = 1; k <= top; ++k) d[k] = bc.boundary(k);
    bool dsq = true;
    for (int k = 2; k <= top; ++k)
        if (!matrix_product(d[k - 1], d[k]).entries.empty()) dsq = false;
    std::vector<int> rank(top + 2, 0);
    for (int k = 1; k <= top; ++k) rank[k] = rank_exact(d[k]);
    bool acyclic = true;
    std::ostringstream os;
    os << "dims=";
    for (int k = 0; k <= top; ++k) os << (k ? "," : "") << bc.dim(k);
    os << " betti=";
    for (int k = 0; k <= top; ++k) {
        long long b = bc.dim(k) - rank[k] - rank[k + 1];
        if (b != 0) acyclic = false;
        os << (k ? "," : "") << b;
    }
    os << (dsq ? " dsquared=0" : " dsquared!=0");
    r.pass = dsq && acyclic;
    r.detail = os.str();
    return r;
}

VerifyReport verify_cut_acyclic(int n, const RankOptions& opt) {
    VerifyReport r;
    r.check = "cut-acyclic";
    HomologyTable t = homology_table(n, BasisMode::CUT_ONLY, opt);
    r.pass = std::all_of(t.rows.begin(), t.rows.end(),
                         [](const DegreeInfo& d) { return d.betti == 0; });
    r.detail = betti_summary(t);
    return r;
}

VerifyReport verify_quasi_iso(int n, const RankOptions& opt) {
    VerifyReport r;
    r.check = "quasi-iso";
    HomologyTable full = homology_table(n, BasisMode::FULL, opt);
    HomologyTable quot = homology_table(n, BasisMode::QUOTIENT, opt);
    bool ok = full.rows.size() == quot.rows.size();
    if (ok)
        for (std::size_t i = 0; i < full.rows.size(); ++i)
            if (full.rows[i].degree != quot.rows[i].degree ||
                full.rows[i].betti != quot.rows[i].betti)
                ok = false;
    r.pass = ok;
    r.detail = "full " + betti_summary(full) + " | quotient " + betti_summary(quot);
    return r;
}

}  // namespace ghk
