#include <doctest.h>

#include "oracles.hpp"
#include "semidom/msd.hpp"
#include "semidom/solvers.hpp"
#include "semidom/trees.hpp"

using namespace semidom;

namespace {
// msd recomputed with the brute-force solver.
int naive_msd(const Graph& g, int k_max) {
    const int base = oracle::min_set(g, Variant::Semitotal).value;
    for (int k = 1; k <= k_max; ++k) {
        for (const auto& e : g.edges()) {
            if (oracle::min_set(subdivide_edge(g, e, k), Variant::Semitotal).value > base) {
                return k;
            }
        }
    }
    return k_max + 1;
}
}  // namespace

TEST_CASE("msd of small named graphs") {
    const auto k5 = msd_semitotal(complete_graph(5));
    CHECK(k5.k == 3);
    CHECK(k5.base_value == 2);
    CHECK(k5.witness_edge == Edge::make(0, 1));
    CHECK(k5.table.size() == 3);

    CHECK(msd_semitotal(path_graph(8)).k == 3);
    CHECK(msd_semitotal(path_graph(5)).k == 1);
    CHECK(msd_semitotal(path_graph(4)).k == 2);
    CHECK(msd_semitotal(path_graph(2)).k == 4);
    CHECK(msd_semitotal(complete_bipartite_graph(2, 3)).k == 2);
}

TEST_CASE("msd search limits") {
    try {
        (void)msd_semitotal(path_graph(2), 3);
        FAIL("expected exhaustion");
    } catch (const MsdSearchExhausted& e) {
        CHECK(e.table().size() == 3);
        for (const auto& row : e.table()) CHECK(row.max_value == 2);
    }
    CHECK_THROWS_AS(msd_semitotal(path_graph(1)), Error);
    CHECK_THROWS_AS(msd_semitotal(build_graph(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("tree classes") {
    CHECK(classify_tree(path_graph(3)) == TreeClass::Class3);
    CHECK(classify_tree(star_graph(4)) == TreeClass::Class3);
    CHECK(classify_tree(path_graph(7)) == TreeClass::Class1);
    CHECK(classify_tree(path_graph(4)) == TreeClass::Class2);
    CHECK_THROWS_AS(classify_tree(path_graph(2)), Error);
    CHECK_THROWS_AS(classify_tree(cycle_graph(4)), Error);
}

TEST_CASE("msd agrees with the brute-force solver") {
    for (int n = 3; n <= 7; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            CHECK(msd_semitotal(t, 3).k == naive_msd(t, 3));
        }
    }
    CHECK(msd_semitotal(cycle_graph(6)).k == naive_msd(cycle_graph(6), 5));
    CHECK(msd_semitotal(wheel_graph(4)).k == naive_msd(wheel_graph(4), 5));
}

TEST_CASE("subdividing a tree edge never lowers gamma_t2") {
    for (int n = 2; n <= 10; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            const int base = min_value(t, Variant::Semitotal);
            for (const auto& e : t.edges()) {
                int prev = base;
                for (int k = 1; k <= 3; ++k) {
                    const int v = min_value(subdivide_edge(t, e, k), Variant::Semitotal);
                    CHECK(v >= prev);
                    prev = v;
                }
            }
        }
    }
}
