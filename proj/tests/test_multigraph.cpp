#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modphi/errors.hpp"
#include "modphi/multigraph.hpp"
#include "modphi/rng.hpp"

using namespace modphi;

namespace {

MultiGraph k3() { return graph_from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}}); }

MultiGraph random_multigraph(CounterRng& rng, int max_v, int max_e) {
    int n = 2 + (int)(rng.next_u64() % (max_v - 1));
    int m = 1 + (int)(rng.next_u64() % max_e);
    MultiGraph g;
    g.n = n;
    for (int e = 0; e < m; ++e) {
        int u = (int)(rng.next_u64() % n);
        int v = (int)(rng.next_u64() % n);
        g.edges.push_back({u, v});
    }
    return g;
}

} // namespace

TEST_CASE("F functional base cases") {
    MultiGraph dot;
    dot.n = 1;
    CHECK(f_functional(dot) == 1);

    MultiGraph loops = graph_from_edge_list(1, {{0, 0}, {0, 0}});
    CHECK(f_functional(loops) == 0);

    MultiGraph disc;
    disc.n = 2;
    CHECK(f_functional(disc) == 0);

    CHECK(f_functional(k3()) == 2); // 3 trees minus the full cycle
}

TEST_CASE("F subset enumeration agrees with deletion-contraction") {
    CounterRng rng(17, 0);
    for (int i = 0; i < 120; ++i) {
        auto g = random_multigraph(rng, 6, 10);
        CHECK(f_functional_subsets(g) == f_functional_deletion_contraction(g));
    }
}

TEST_CASE("spanning tree counts") {
    MultiGraph dot = graph_from_edge_list(1, {{0, 0}, {0, 0}, {0, 0}});
    CHECK(spanning_tree_count(dot) == 1); // loops alone leave the empty tree

    CHECK(spanning_tree_count(k3()) == 3);

    MultiGraph parallel4 = graph_from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    CHECK(spanning_tree_count(parallel4) == 4);

    MultiGraph disc;
    disc.n = 3;
    disc.edges = {{0, 1}};
    CHECK(spanning_tree_count(disc) == 0);
}

TEST_CASE("matrix-tree agrees with deletion-contraction") {
    CounterRng rng(23, 0);
    for (int i = 0; i < 150; ++i) {
        auto g = random_multigraph(rng, 6, 12);
        CHECK(spanning_tree_count(g) == spanning_tree_count_deletion_contraction(g));
    }
}

TEST_CASE("bicolored spanning-tree identity examples") {
    auto [lhs, rhs] = bicolored_identity_check(k3());
    CHECK(lhs == 12);
    CHECK(rhs == 12);

    MultiGraph edge = graph_from_edge_list(2, {{0, 1}});
    auto [l2, r2] = bicolored_identity_check(edge);
    CHECK(l2 == 2);
    CHECK(r2 == 2);

    MultiGraph disc;
    disc.n = 3;
    disc.edges = {{0, 1}};
    auto [l3, r3] = bicolored_identity_check(disc);
    CHECK(l3 == 0);
    CHECK(r3 == 0);
}

TEST_CASE("bicolored identity holds exhaustively on <= 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            MultiGraph g;
            g.n = n;
            int e = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++e)
                    if (mask >> e & 1) g.edges.push_back({i, j});
            if (!g.connected()) continue;
            auto [lhs, rhs] = bicolored_identity_check(g);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("tutte evaluations match F and ST") {
    CHECK(tutte_point(k3(), 1, 1) == 3);
    CHECK(tutte_point(k3(), 1, 0) == 2);
    MultiGraph edge = graph_from_edge_list(2, {{0, 1}});
    CHECK(tutte_point(edge, 1, 0) == 1);
    CHECK(tutte_point(edge, 1, 1) == 1);

    MultiGraph disc;
    disc.n = 3;
    disc.edges = {{0, 1}};
    CHECK_THROWS_AS(tutte_point(disc, 1, 1), disconnected_error);
}

TEST_CASE("200 random multigraphs: F = T(1,0), ST = T(1,1), 0 <= F <= ST") {
    CounterRng rng(31, 0);
    int done = 0;
    while (done < 200) {
        auto g = random_multigraph(rng, 7, 14);
        long long F = f_functional(g);
        long long ST = spanning_tree_count(g);
        CHECK(0 <= F);
        CHECK(F <= ST);
        if (g.connected() && g.edge_count() <= 14) {
            CHECK(F == tutte_point(g, 1, 0));
            CHECK(ST == tutte_point(g, 1, 1));
        }
        ++done;
    }
}
