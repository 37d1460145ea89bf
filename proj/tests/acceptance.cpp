// Acceptance suite: one line per criterion. Exit code 0 iff everything that
// is required passes; the extended rank-7 criterion is skipped unless
// GHK_ACCEPT_EXTENDED is set.

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ghk/bialgebra.hpp"
#include "ghk/canonical.hpp"
#include "ghk/complex.hpp"
#include "ghk/config.hpp"
#include "ghk/enumerate.hpp"
#include "ghk/exactrank.hpp"
#include "ghk/multigraph.hpp"
#include "ghk/orient.hpp"
#include "ghk/verify.hpp"

using namespace ghk;

namespace {

int g_failures = 0;

void report(int crit, bool pass, const std::string& what) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << crit << ": " << what << std::endl;
    if (!pass) ++g_failures;
}

struct Expected {
    std::vector<long long> dims;   // degree 2n-2 downwards
    std::vector<long long> ranks;  // same order
};

bool table_matches(const HomologyTable& t, const Expected& e, std::string& why) {
    if (t.rows.size() != e.dims.size() || t.rows.size() != e.ranks.size()) {
        why = "row count mismatch";
        return false;
    }
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.rows[i].dim != e.dims[i] || t.rows[i].rank_out != e.ranks[i]) {
            std::ostringstream os;
            os << "degree " << t.rows[i].degree << ": got (" << t.rows[i].dim << ","
               << t.rows[i].rank_out << ") expected (" << e.dims[i] << "," << e.ranks[i] << ")";
            why = os.str();
            return false;
        }
    return true;
}

bool betti_matches(const HomologyTable& t, const std::vector<std::pair<int, long long>>& nonzero,
                   std::string& why) {
    for (const auto& row : t.rows) {
        long long want = 0;
        for (const auto& [deg, b] : nonzero)
            if (deg == row.degree) want = b;
        if (row.betti != want) {
            std::ostringstream os;
            os << "degree " << row.degree << ": betti " << row.betti << " expected " << want;
            why = os.str();
            return false;
        }
    }
    return true;
}

// The body of dsquared_check on an already-built complex, so the expensive
// rank-6 FULL enumeration can be shared with the CUT_ONLY check.
bool split_dsquared(const ChainComplex& cx) {
    const int n = cx.rank();
    std::vector<BoundaryMatrix> full(2 * n - 1), sep(2 * n - 1), nonsep(2 * n - 1);
    for (int k = 2; k <= 2 * n - 2; ++k) {
        full[k] = cx.boundary_matrix(k, EdgeFilter::ALL);
        sep[k] = cx.boundary_matrix(k, EdgeFilter::SEPARATING);
        nonsep[k] = cx.boundary_matrix(k, EdgeFilter::NONSEPARATING);
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

std::string table_csv(int n) {
    HomologyTable t = homology_table(n, BasisMode::QUOTIENT);
    std::ostringstream os;
    for (const auto& r : t.rows)
        os << n << "," << r.degree << "," << r.dim << "," << r.rank_out << "," << r.betti << "\n";
    return os.str();
}

void criterion_1_2_3() {
    const Expected e3{{2, 1, 0}, {1, 0, 0}};
    const Expected e4{{4, 3, 0, 1, 1}, {3, 0, 0, 1, 0}};
    const Expected e5{{14, 19, 12, 12, 10, 3, 0}, {12, 7, 5, 7, 3, 0, 0}};
    const Expected e6{{54, 128, 177, 218, 177, 72, 12, 2, 1},
                      {52, 76, 101, 116, 61, 11, 1, 1, 0}};
    std::vector<HomologyTable> tables;
    for (int n = 2; n <= 6; ++n) tables.push_back(homology_table(n, BasisMode::QUOTIENT));

    std::string why;
    bool ok = table_matches(tables[1], e3, why) && table_matches(tables[2], e4, why) &&
              table_matches(tables[3], e5, why);
    report(1, ok, "dimension/rank tables for n = 3, 4, 5" + (ok ? "" : " (" + why + ")"));

    ok = table_matches(tables[4], e6, why);
    report(2, ok, "dimension/rank table for n = 6" + (ok ? "" : " (" + why + ")"));

    const std::vector<std::vector<std::pair<int, long long>>> hs = {
        {{2, 1}}, {{4, 1}}, {{6, 1}}, {{8, 2}}, {{10, 2}, {7, 1}}};
    ok = true;
    for (int n = 2; n <= 6; ++n)
        if (!betti_matches(tables[n - 2], hs[n - 2], why)) ok = false;
    report(3, ok, "Betti numbers for 2 <= n <= 6" + (ok ? "" : " (" + why + ")"));
}

void criterion_4() {
    if (std::getenv("GHK_ACCEPT_EXTENDED") == nullptr) {
        std::cout << "SKIP criterion 4: rank-7 table (set GHK_ACCEPT_EXTENDED=1 to run)"
                  << std::endl;
        return;
    }
    const Expected e7{{298, 1123, 2388, 3530, 3362, 1933, 678, 173, 41, 6, 0},
                      {295, 828, 1560, 1969, 1393, 540, 138, 35, 6, 0, 0}};
    HomologyTable t = homology_table(7, BasisMode::QUOTIENT);
    std::string why;
    bool ok = table_matches(t, e7, why) && betti_matches(t, {{12, 3}, {9, 1}}, why);
    report(4, ok, "rank-7 extended table" + (ok ? "" : " (" + why + ")"));
}

void criterion_5() {
    bool ok = true;
    std::string why;
    for (int n = 2; n <= 5; ++n)
        for (BasisMode m : {BasisMode::QUOTIENT, BasisMode::FULL, BasisMode::CUT_ONLY})
            if (!dsquared_check(n, m)) {
                ok = false;
                why = "rank " + std::to_string(n) + " mode " + to_string(m);
            }
    if (ok && !dsquared_check(6, BasisMode::QUOTIENT)) {
        ok = false;
        why = "rank 6 quotient";
    }
    if (ok) {
        // One loop-free oracle enumeration serves both rank-6 subcomplex modes.
        GradedBasis gfull = graded_basis(6, BasisMode::FULL);
        GradedBasis gcut;
        gcut.rank = 6;
        gcut.mode = BasisMode::CUT_ONLY;
        gcut.by_degree.assign(11, {});
        gcut.zero_classes.assign(11, {});
        for (int k = 2; k <= 10; ++k)
            for (const auto& c : gfull.at(k))
                if (!cut_vertices(canonical_graph(c)).empty()) gcut.by_degree[k].push_back(c);
        if (!split_dsquared(ChainComplex(std::move(gfull)))) {
            ok = false;
            why = "rank 6 full";
        }
        if (ok && !split_dsquared(ChainComplex(std::move(gcut)))) {
            ok = false;
            why = "rank 6 cutonly";
        }
    }
    // Negative control: flipping one sign in a differential breaks d^2 = 0.
    bool control = false;
    if (ok) {
        ChainComplex cx(graded_basis(5, BasisMode::QUOTIENT));
        BoundaryMatrix d7 = cx.boundary_matrix(7, EdgeFilter::ALL);
        BoundaryMatrix d6 = cx.boundary_matrix(6, EdgeFilter::ALL);
        for (auto& t : d7.entries) {
            long long saved = t.value;
            t.value = -t.value;
            if (!matrix_product(d6, d7).entries.empty()) {
                control = true;
                t.value = saved;
                break;
            }
            t.value = saved;
        }
        if (!control) why = "sign mutation went undetected";
    }
    report(5, ok && control, "d^2 = 0 with the separating split, ranks <= 6, all modes; "
                             "sign-mutation control detected");
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    for (int n : {3, 4}) {
        VerifyReport c = verify_cut_acyclic(n);
        VerifyReport q = verify_quasi_iso(n);
        if (!c.pass || !q.pass) {
            ok = false;
            detail = " (n=" + std::to_string(n) + ": " + c.detail + " / " + q.detail + ")";
        }
    }
    report(6, ok, "cut-vertex subcomplex acyclic and quasi-isomorphism for n = 3, 4" + detail);
}

void criterion_7() {
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
        std::set<std::string> generated, filtered;
        for (const auto& c : cubic_no_cut(n)) generated.insert(c.key);
        for (const auto& c : oracle_cubic(n)) {
            Multigraph g = canonical_graph(c);
            if (cut_vertices(g).empty() && bridges(g).empty()) filtered.insert(c.key);
        }
        if (generated != filtered) ok = false;
    }
    report(7, ok, "generated cubic classes equal the filtered oracle enumeration, n <= 5");
}

void criterion_8() {
    BasisCache cache(BasisMode::QUOTIENT);
    bool ok = true;
    std::string why;

    // Quotient basis graphs of rank <= 4, all degrees.
    std::vector<Multigraph> small;
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= 2 * n - 2; ++k)
            for (const auto& c : cache.at(n).basisset().at(k))
                small.push_back(canonical_graph(c));

    // Every glued contraction of two cut-vertex-free graphs is connected
    // and has no cut vertices (the bracket stays inside the quotient).
    for (const auto& g : small)
        for (const auto& h : small) {
            Multigraph u = disjoint_union(g, h);
            for (int x = 0; x < 2 * g.num_edges() && ok; ++x)
                for (int y = 2 * g.num_edges(); y < u.num_half_edges(); ++y) {
                    Multigraph t = contract_half_edges(u, x, y);
                    if (!t.connected() || !cut_vertices(t).empty()) {
                        ok = false;
                        why = "bracket term with a cut vertex";
                        break;
                    }
                }
        }

    // Conversely, if one input has a cut vertex, so does every term. The
    // smallest nonzero cut-vertex classes live at rank 5.
    if (ok) {
        GradedBasis gcut = graded_basis(5, BasisMode::CUT_ONLY);
        Multigraph th = theta_graph();
        for (int k = 2; k <= 8 && ok; ++k)
            for (const auto& c : gcut.at(k)) {
                Multigraph g = canonical_graph(c);
                Multigraph u = disjoint_union(g, th);
                for (int x = 0; x < 2 * g.num_edges() && ok; ++x)
                    for (int y = 2 * g.num_edges(); y < u.num_half_edges(); ++y)
                        if (cut_vertices(contract_half_edges(u, x, y)).empty()) {
                            ok = false;
                            why = "cut-vertex input lost its cut vertex";
                        }
            }
    }

    // Both factors of every separating contraction are connected.
    if (ok) {
        for (const auto& g : small)
            for (auto [x, y] : separating_pairs(g)) {
                Multigraph t = contract_half_edges(g, x, y);
                if (t.num_components() != 2) {
                    ok = false;
                    why = "disconnected cobracket factor";
                }
            }
    }

    // Compatibility identity for every ordered basis pair with rank sum <= 5.
    if (ok) {
        for (int ng = 2; ng <= 3 && ok; ++ng)
            for (int nh = 2; ng + nh <= 5 && ok; ++nh)
                for (int kg = 2; kg <= 2 * ng - 2; ++kg)
                    for (int kh = 2; kh <= 2 * nh - 2; ++kh)
                        for (const auto& g : cache.at(ng).basisset().at(kg))
                            for (const auto& h : cache.at(nh).basisset().at(kh))
                                if (!compatibility_defect(g, h, cache).is_zero()) {
                                    ok = false;
                                    why = "compatibility identity";
                                }
    }

    // cobracket(theta) = 0 and the frozen [theta, theta] value.
    if (ok) {
        SignedCanonical th =
            reduce_to_canonical(theta_graph(), reference_orientation(theta_graph()));
        if (!cobracket(th.canon, cache).is_zero()) {
            ok = false;
            why = "cobracket(theta)";
        }
        ChainVector tt = bracket(th.canon, th.canon, cache);
        if (!(tt.entries.size() == 1 && tt.entries.begin()->second == Rational(-36))) {
            ok = false;
            why = "[theta,theta]";
        }
    }
    report(8, ok, "bracket/cobracket term structure, compatibility for rank sum <= 5, cobracket(theta) = 0" +
                      (ok ? "" : " (" + why + ")"));
}

void criterion_9() {
    std::vector<std::string> outputs;
    for (int threads : {1, 4, 8}) {
        Config cfg;
        cfg.threads = threads;
        cfg.apply();
        outputs.push_back(table_csv(4) + table_csv(5));
    }
    Config{}.apply();
    bool ok = outputs[0] == outputs[1] && outputs[1] == outputs[2];
    report(9, ok, "homology tables byte-identical across 1, 4, 8 threads");
}

}  // namespace

int main() {
    criterion_1_2_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
    return g_failures == 0 ? 0 : 1;
}
