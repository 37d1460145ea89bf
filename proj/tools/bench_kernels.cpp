// Timing comparison of the OpenMP kernels against their serial reference
// paths: basis enumeration, boundary assembly, and exact rank.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghk/complex.hpp"
#include "ghk/config.hpp"
#include "ghk/enumerate.hpp"
#include "ghk/exactrank.hpp"

using namespace ghk;

namespace {

double seconds(auto fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void row(const std::string& kernel, double serial, double parallel) {
    std::cout << kernel << "," << serial << "," << parallel << ","
              << (parallel > 0 ? serial / parallel : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timings"};
    int rank = 5;
    std::string mode_s = "quotient";
    app.add_option("--rank", rank, "fundamental rank (default 5)");
    app.add_option("--mode", mode_s, "quotient|full|cut-only");
    CLI11_PARSE(app, argc, argv);
    BasisMode mode = basis_mode_from_string(mode_s);
    Config::from_environment().apply();

    std::cout << "kernel,serial_s,parallel_s,speedup\n";

    GradedBasis gs, gp;
    double es = seconds([&] { gs = graded_basis(rank, mode, false); });
    double ep = seconds([&] { gp = graded_basis(rank, mode, true); });
    row("enumerate", es, ep);
    for (int k = 2; k <= 2 * rank - 2; ++k)
        if (gs.at(k).size() != gp.at(k).size()) {
            std::cerr << "enumeration mismatch at degree " << k << "\n";
            return 1;
        }

    ChainComplex cc(gp);
    std::vector<BoundaryMatrix> ms, mp;
    double bs = seconds([&] {
        for (int k = 3; k <= 2 * rank - 2; ++k)
            ms.push_back(cc.boundary_matrix(k, EdgeFilter::ALL, false));
    });
    double bp = seconds([&] {
        for (int k = 3; k <= 2 * rank - 2; ++k)
            mp.push_back(cc.boundary_matrix(k, EdgeFilter::ALL, true));
    });
    row("boundary", bs, bp);
    if (!(ms == mp)) {
        std::cerr << "boundary matrices differ between serial and parallel\n";
        return 1;
    }

    std::vector<int> rs, rp;
    RankOptions serial_opt, parallel_opt;
    serial_opt.parallel = false;
    parallel_opt.parallel = true;
    double qs = seconds([&] {
        for (const auto& m : ms) rs.push_back(rank_exact(m, serial_opt));
    });
    double qp = seconds([&] {
        for (const auto& m : mp) rp.push_back(rank_exact(m, parallel_opt));
    });
    row("rank", qs, qp);
    if (rs != rp) {
        std::cerr << "ranks differ between serial and parallel\n";
        return 1;
    }
    return 0;
}
