#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ghk/canonical.hpp"
#include "test_util.hpp"

using namespace ghk;

TEST_CASE("theta normal form") {
    auto nf = normal_form(theta_graph());
    CHECK(nf.canon.adj.at(0, 1) == 3);
    CHECK(nf.canon.key == "2:0,3,0");
}

TEST_CASE("normal form key is a class invariant") {
    std::mt19937 rng(3);
    Multigraph k4 = complete_graph(4);
    auto key = normal_form(k4).canon.key;
    for (int i = 0; i < 50; ++i)
        CHECK(normal_form(testing::shuffled(k4, rng)).canon.key == key);

    for (int iter = 0; iter < 200; ++iter) {
        Multigraph g = testing::random_connected(rng, 8);
        auto k = normal_form(g).canon.key;
        for (int j = 0; j < 5; ++j)
            CHECK(normal_form(testing::shuffled(g, rng)).canon.key == k);
    }
}

TEST_CASE("is_isomorphic") {
    std::mt19937 rng(5);
    Multigraph g = testing::random_connected(rng, 6);
    CHECK(is_isomorphic(g, testing::shuffled(g, rng)));
    CHECK_FALSE(is_isomorphic(theta_graph(), dumbbell_graph()));
    // K4 versus K4 with an edge traded for a parallel copy
    Multigraph k4mod(4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK_FALSE(is_isomorphic(complete_graph(4), k4mod));
}

TEST_CASE("automorphism counts") {
    CHECK(automorphisms(complete_graph(4)).size() == 24);
    CHECK(automorphisms(theta_graph()).size() == 12);
    Multigraph loop(1, {{0, 0}});
    CHECK(automorphisms(loop).size() == 2);
}

TEST_CASE("automorphisms form a group") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 40; ++iter) {
        Multigraph g = testing::random_connected(rng, 5);
        std::vector<std::vector<int>> autos;
        try {
            autos = automorphisms(g, 20000);
        } catch (const std::runtime_error&) {
            continue;
        }
        std::set<std::vector<int>> group(autos.begin(), autos.end());
        CHECK(group.size() == autos.size());
        std::vector<int> id(g.num_half_edges());
        for (int h = 0; h < g.num_half_edges(); ++h) id[h] = h;
        CHECK(group.count(id) == 1);
        // closure and inverses on a sample
        std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
        for (int s = 0; s < 20; ++s) {
            const auto& a = autos[pick(rng)];
            const auto& b = autos[pick(rng)];
            std::vector<int> ab(a.size()), ainv(a.size());
            for (std::size_t h = 0; h < a.size(); ++h) {
                ab[h] = a[b[h]];
                ainv[a[h]] = static_cast<int>(h);
            }
            CHECK(group.count(ab) == 1);
            CHECK(group.count(ainv) == 1);
        }
    }
}

TEST_CASE("simple graph automorphisms match vertex permutation oracle") {
    std::mt19937 rng(23);
    int tested = 0;
    while (tested < 30) {
        Multigraph g = testing::random_connected(rng, 6, false);
        auto adj = g.to_adjacency();
        bool simple = true;
        for (int i = 0; i < adj.n && simple; ++i)
            for (int j = i; j < adj.n; ++j)
                if ((i == j && adj.at(i, i) > 0) || adj.at(i, j) > 1) simple = false;
        if (!simple) continue;
        ++tested;
        std::vector<int> perm(g.num_vertices());
        for (int i = 0; i < g.num_vertices(); ++i) perm[i] = i;
        std::size_t count = 0;
        do {
            bool ok = true;
            for (int i = 0; i < adj.n && ok; ++i)
                for (int j = i; j < adj.n && ok; ++j)
                    if (adj.at(i, j) != adj.at(perm[i], perm[j])) ok = false;
            if (ok) ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(automorphisms(g).size() == count);
        CHECK(vertex_automorphisms(g).size() == count);
    }
}

TEST_CASE("witness map is a valid isomorphism onto the canonical graph") {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 100; ++iter) {
        Multigraph g = testing::random_connected(rng, 7);
        auto nf = normal_form(g);
        Multigraph c = canonical_graph(nf.canon);
        auto hmap = witness_half_edge_map(g, nf);
        std::vector<bool> hit(c.num_half_edges(), false);
        for (int h = 0; h < g.num_half_edges(); ++h) {
            CHECK_FALSE(hit[hmap[h]]);
            hit[hmap[h]] = true;
            // edge pairing preserved
            CHECK(hmap[Multigraph::partner(h)] == Multigraph::partner(hmap[h]));
            // vertex incidence preserved
            CHECK(c.vertex_of(hmap[h]) == nf.relabel[g.vertex_of(h)]);
        }
    }
}
