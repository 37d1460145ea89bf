// Command-line front end: enumeration, homology tables, the bracket and
// cobracket, and the structural verification checks.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghk/bialgebra.hpp"
#include "ghk/canonical.hpp"
#include "ghk/complex.hpp"
#include "ghk/config.hpp"
#include "ghk/enumerate.hpp"
#include "ghk/exactrank.hpp"
#include "ghk/io.hpp"
#include "ghk/multigraph.hpp"
#include "ghk/orient.hpp"
#include "ghk/verify.hpp"

namespace fs = std::filesystem;
using namespace ghk;

namespace {

RankOptions rank_options(const Config& cfg) {
    RankOptions opt;
    if (!cfg.primes.empty()) opt.primes = cfg.primes;
    return opt;
}

// Reads the first graph of a text-format file.
Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::vector<Multigraph> gs = read_graphs(in);
    if (gs.empty()) throw std::invalid_argument("no graph records in " + path);
    return gs.front();
}

// Canonical quotient-basis class of a graph; throws when the class is not a
// quotient basis element.
CanonicalGraph quotient_class(const Multigraph& g, BasisCache& cache) {
    if (!g.connected()) throw std::invalid_argument("graph must be connected");
    SignedCanonical sc = reduce_to_canonical(g, reference_orientation(g));
    if (sc.sign == 0) throw std::invalid_argument("graph spans the zero class");
    if (!cut_vertices(g).empty()) throw std::invalid_argument("graph has a cut vertex");
    int n = fundamental_rank(g);
    if (cache.at(n).index_of(g.num_vertices(), sc.canon.key) < 0)
        throw std::invalid_argument("graph is not a quotient basis class");
    return sc.canon;
}

int cmd_enumerate(int rank, BasisMode mode, const std::string& out_dir) {
    fs::create_directories(out_dir.empty() ? "." : out_dir);
    std::vector<fs::path> paths;
    bool all_cached = true;
    for (int k = 2; k <= 2 * rank - 2; ++k) {
        paths.push_back(fs::path(out_dir.empty() ? "." : out_dir) / basis_filename(rank, k, mode));
        if (!fs::exists(paths.back())) all_cached = false;
    }
    if (all_cached) {
        for (const auto& p : paths) std::cout << "cached " << p.string() << "\n";
        return 0;
    }
    GradedBasis gb = graded_basis(rank, mode);
    for (int k = 2; k <= 2 * rank - 2; ++k) {
        std::ofstream out(paths[k - 2]);
        write_graphs(out, gb.at(k));
        std::cout << "wrote " << paths[k - 2].string() << " (" << gb.at(k).size()
                  << " classes)\n";
    }
    return 0;
}

int cmd_homology(int rank, BasisMode mode, const Config& cfg, const std::string& format,
                 bool extended) {
    if (rank >= 7 && !extended)
        throw std::invalid_argument("rank >= 7 is a multi-hour run; pass --extended");
    RankOptions opt = rank_options(cfg);
    ChainComplex cc(graded_basis(rank, mode, opt.parallel));
    std::vector<long long> dims(2 * rank - 1, 0), ranks(2 * rank - 1, 0);
    for (int k = 2; k <= 2 * rank - 2; ++k) dims[k] = cc.dim(k);
    for (int k = 3; k <= 2 * rank - 2; ++k) {
        BoundaryMatrix m;
        fs::path cached;
        if (!cfg.cache_dir.empty()) {
            fs::create_directories(cfg.cache_dir);
            std::ostringstream name;
            name << "boundary_r" << rank << "_k" << k << "_" << to_string(mode) << ".txt";
            cached = fs::path(cfg.cache_dir) / name.str();
        }
        if (!cached.empty() && fs::exists(cached)) {
            std::ifstream in(cached);
            m = read_matrix(in);
        } else {
            m = cc.boundary_matrix(k, EdgeFilter::ALL, opt.parallel);
            if (!cached.empty()) {
                std::ofstream out(cached);
                write_matrix(out, m);
            }
        }
        ranks[k] = rank_exact(m, opt);
    }
    HomologyTable t = betti(rank, mode, dims, ranks);
    if (format == "json") {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const DegreeInfo& d = t.rows[i];
            os << (i ? "," : "") << "{\"rank\":" << rank << ",\"degree\":" << d.degree
               << ",\"dim\":" << d.dim << ",\"boundary_rank_out\":" << d.rank_out
               << ",\"betti\":" << d.betti << "}";
        }
        os << "]";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "rank,degree,dim,boundary_rank_out,betti\n";
        for (const DegreeInfo& d : t.rows)
            std::cout << rank << "," << d.degree << "," << d.dim << "," << d.rank_out << ","
                      << d.betti << "\n";
    }
    return 0;
}

int cmd_bracket(const std::string& file_g, const std::string& file_h) {
    BasisCache cache(BasisMode::QUOTIENT);
    CanonicalGraph g = quotient_class(load_graph(file_g), cache);
    CanonicalGraph h = quotient_class(load_graph(file_h), cache);
    ChainVector v = bracket(g, h, cache);
    std::cout << chain_to_json(v, cache.at(v.rank).basisset()) << "\n";
    return 0;
}

int cmd_cobracket(const std::string& file_g) {
    BasisCache cache(BasisMode::QUOTIENT);
    CanonicalGraph g = quotient_class(load_graph(file_g), cache);
    TensorChain t = cobracket(g, cache);
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& [key, c] : t.entries) terms.emplace_back(key.key_a + " (x) " + key.key_b, c);
    std::cout << terms_to_json(terms) << "\n";
    return 0;
}

VerifyReport check_dsquared(int rank) {
    VerifyReport r;
    r.check = "dsquared";
    std::ostringstream os;
    r.pass = true;
    for (BasisMode m : {BasisMode::QUOTIENT, BasisMode::FULL, BasisMode::CUT_ONLY}) {
        bool ok = dsquared_check(rank, m);
        if (!ok) r.pass = false;
        os << to_string(m) << (ok ? " ok " : " FAIL ");
    }
    r.detail = os.str();
    return r;
}

VerifyReport check_oracle(int rank) {
    VerifyReport r;
    r.check = "oracle";
    if (rank > 5) throw std::invalid_argument("oracle check bounded at rank 5");
    std::set<std::string> generated, filtered;
    for (const auto& c : cubic_no_cut(rank)) generated.insert(c.key);
    for (const auto& c : oracle_cubic(rank)) {
        Multigraph g = canonical_graph(c);
        if (cut_vertices(g).empty() && bridges(g).empty()) filtered.insert(c.key);
    }
    r.pass = generated == filtered;
    r.detail = "generated=" + std::to_string(generated.size()) +
               " oracle-filtered=" + std::to_string(filtered.size());
    return r;
}

VerifyReport check_bialgebra() {
    VerifyReport r;
    r.check = "bialgebra";
    BasisCache cache(BasisMode::QUOTIENT);
    SignedCanonical th = reduce_to_canonical(theta_graph(), reference_orientation(theta_graph()));
    bool ok = cobracket(th.canon, cache).is_zero();
    ChainVector tt = bracket(th.canon, th.canon, cache);
    ok = ok && tt.rank == 3 && tt.degree == 3 && tt.entries.size() == 1 &&
         tt.entries.begin()->second == Rational(-36);
    // Compatibility identity on every ordered basis pair with rank sum <= 5.
    int pairs = 0;
    for (int ng = 2; ng <= 3; ++ng)
        for (int nh = 2; nh + ng <= 5; ++nh)
            for (int kg = 2; kg <= 2 * ng - 2; ++kg)
                for (int kh = 2; kh <= 2 * nh - 2; ++kh)
                    for (const auto& g : cache.at(ng).basisset().at(kg))
                        for (const auto& h : cache.at(nh).basisset().at(kh)) {
                            if (!compatibility_defect(g, h, cache).is_zero()) ok = false;
                            ++pairs;
                        }
    r.pass = ok;
    r.detail = "cobracket(theta)=0, [theta,theta]=-36*w3, compat pairs=" + std::to_string(pairs);
    return r;
}

int cmd_verify(const std::string& check, int rank, const std::string& graph_file,
               const Config& cfg) {
    std::vector<VerifyReport> reports;
    RankOptions opt = rank_options(cfg);
    if (check == "cut-acyclic") {
        reports.push_back(verify_cut_acyclic(rank, opt));
    } else if (check == "quasi-iso") {
        reports.push_back(verify_quasi_iso(rank, opt));
    } else if (check == "rg") {
        if (!graph_file.empty()) {
            reports.push_back(verify_rg_acyclic(load_graph(graph_file)));
        } else {
            // Built-in examples: two and three thetas glued at one vertex.
            for (int lobes : {2, 3}) {
                std::vector<std::pair<int, int>> edges;
                for (int i = 1; i <= lobes; ++i)
                    for (int j = 0; j < 3; ++j) edges.push_back({0, i});
                reports.push_back(verify_rg_acyclic(Multigraph(lobes + 1, edges)));
            }
        }
    } else if (check == "dsquared") {
        reports.push_back(check_dsquared(rank));
    } else if (check == "bialgebra") {
        reports.push_back(check_bialgebra());
    } else if (check == "oracle") {
        reports.push_back(check_oracle(rank));
    } else {
        throw std::invalid_argument("unknown check: " + check);
    }
    bool all = true;
    std::cout << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const VerifyReport& r = reports[i];
        if (!r.pass) all = false;
        std::cout << (i ? "," : "") << "{\"check\":\"" << r.check << "\",\"pass\":"
                  << (r.pass ? "true" : "false") << ",\"detail\":\"" << r.detail << "\"}";
    }
    std::cout << "]\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph homology kit: the commutative graph complex modulo cut vertices"};
    app.require_subcommand(1);

    Config cfg = Config::from_environment();
    app.add_option("--threads", cfg.threads, "worker threads (default: GHK_THREADS or library)");
    app.add_option("--cache-dir", cfg.cache_dir, "basis/matrix cache directory (GHK_CACHE_DIR)");
    std::string primes_csv;
    app.add_option("--primes", primes_csv, "comma-separated rank primes (GHK_PRIMES)");

    int rank = 3;
    std::string mode_s = "quotient";
    std::string out_dir, format = "csv", check, graph_file, file_g, file_h;
    bool extended = false;

    CLI::App* enumerate = app.add_subcommand("enumerate", "write basis files per degree");
    enumerate->add_option("--rank", rank, "fundamental rank")->required();
    enumerate->add_option("--mode", mode_s, "quotient|full|cut-only");
    enumerate->add_option("--out", out_dir, "output directory (default: cache dir)");

    CLI::App* homology = app.add_subcommand("homology", "dimension/rank/Betti table");
    homology->add_option("--rank", rank, "fundamental rank")->required();
    homology->add_option("--mode", mode_s, "quotient|full|cut-only");
    homology->add_option("--format", format, "csv|json");
    homology->add_flag("--extended", extended, "allow the multi-hour rank-7 run");

    CLI::App* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two graph files");
    bracket_cmd->add_option("first", file_g, "first graph file")->required();
    bracket_cmd->add_option("second", file_h, "second graph file")->required();

    CLI::App* cobracket_cmd = app.add_subcommand("cobracket", "cobracket of a graph file");
    cobracket_cmd->add_option("graph", file_g, "graph file")->required();

    CLI::App* verify = app.add_subcommand("verify", "structural checks");
    verify->add_option("--check", check, "cut-acyclic|quasi-iso|rg|dsquared|bialgebra|oracle")
        ->required();
    verify->add_option("--rank", rank, "rank for rank-based checks");
    verify->add_option("--graph", graph_file, "graph file for the rg check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!primes_csv.empty()) cfg.primes = parse_primes(primes_csv);
        cfg.apply();
        if (enumerate->parsed()) {
            std::string out = !out_dir.empty() ? out_dir : cfg.cache_dir;
            return cmd_enumerate(rank, basis_mode_from_string(mode_s), out);
        }
        if (homology->parsed())
            return cmd_homology(rank, basis_mode_from_string(mode_s), cfg, format, extended);
        if (bracket_cmd->parsed()) return cmd_bracket(file_g, file_h);
        if (cobracket_cmd->parsed()) return cmd_cobracket(file_g);
        if (verify->parsed()) return cmd_verify(check, rank, graph_file, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
