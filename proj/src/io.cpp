#include "ghk/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ghk {

std::string graph_record(const Multigraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.endpoint(e, 0), v = g.endpoint(e, 1);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    os << "g " << g.num_vertices() << ' ' << g.num_edges() << ' ' << fundamental_rank(g)
       << '\n';
    for (auto [u, v] : edges) os << u << ' ' << v << '\n';
    return os.str();
}

void write_graphs(std::ostream& os, const std::vector<CanonicalGraph>& graphs) {
    std::vector<std::string> records;
    records.reserve(graphs.size());
    for (const auto& c : graphs) records.push_back(graph_record(canonical_graph(c)));
    std::sort(records.begin(), records.end());
    for (const auto& r : records) os << r;
}

std::vector<Multigraph> read_graphs(std::istream& is) {
    std::vector<Multigraph> out;
    std::string tag;
    while (is >> tag) {
        if (tag != "g") throw std::invalid_argument("graph record must start with 'g'");
        int v = 0, e = 0, r = 0;
        if (!(is >> v >> e >> r)) throw std::invalid_argument("malformed graph header");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < e; ++i) {
            int a = 0, b = 0;
            if (!(is >> a >> b)) throw std::invalid_argument("malformed edge line");
            if (a > b) throw std::invalid_argument("edge endpoints must satisfy u <= v");
            edges.emplace_back(a, b);
        }
        Multigraph g(v, std::move(edges));
        if (fundamental_rank(g) != r) throw std::invalid_argument("rank field mismatch");
        out.push_back(std::move(g));
    }
    return out;
}

void write_matrix(std::ostream& os, const BoundaryMatrix& m) {
    os << m.rows << ' ' << m.cols << '\n';
    for (const auto& t : m.entries)
        os << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
    os << "0 0 0\n";
}

BoundaryMatrix read_matrix(std::istream& is) {
    BoundaryMatrix m;
    if (!(is >> m.rows >> m.cols)) throw std::invalid_argument("malformed matrix header");
    while (true) {
        int i = 0, j = 0;
        long long v = 0;
        if (!(is >> i >> j >> v)) throw std::invalid_argument("malformed matrix triplet");
        if (i == 0 && j == 0 && v == 0) break;
        if (i < 1 || i > m.rows || j < 1 || j > m.cols)
            throw std::invalid_argument("matrix triplet out of range");
        m.entries.push_back({i - 1, j - 1, v});
    }
    return m;
}

std::string basis_filename(int n, int k, BasisMode mode) {
    std::ostringstream os;
    os << "basis_r" << n << "_d" << k << '_' << to_string(mode) << ".txt";
    return os.str();
}

std::string terms_to_json(const std::vector<std::pair<std::string, Rational>>& terms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, c] : terms)
        arr.push_back({{"key", key}, {"num", c.num}, {"den", c.den}});
    return arr.dump();
}

std::string chain_to_json(const ChainVector& v, const GradedBasis& basis) {
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& [idx, c] : v.entries)
        terms.emplace_back(basis.at(v.degree)[idx].key, c);
    return terms_to_json(terms);
}

}  // namespace ghk
