#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semidom/solvers.hpp"
#include "semidom/trees.hpp"

using namespace semidom;

namespace {
constexpr Variant kVariants[] = {Variant::Plain, Variant::Total, Variant::Semitotal};

void agree_with_oracle(const Graph& g) {
    for (Variant var : kVariants) {
        if (var != Variant::Plain && has_isolated_vertex(g)) continue;
        const auto want = oracle::min_set(g, var);
        const auto got = min_set(g, var);
        CAPTURE(to_string(var));
        REQUIRE(got.value == want.value);
        CHECK(got.witness == want.witness);
        CHECK(min_value(g, var) == want.value);
    }
}
}  // namespace

TEST_CASE("check_set") {
    const Graph p3 = path_graph(3);
    const std::vector<Vertex> center{1};
    CHECK(check_set(p3, center, Variant::Plain));
    CHECK_FALSE(check_set(p3, center, Variant::Semitotal));
    CHECK_FALSE(check_set(p3, center, Variant::Total));

    const std::vector<Vertex> s14{1, 4};
    CHECK(check_set(path_graph(6), s14, Variant::Plain));
    CHECK_FALSE(check_set(path_graph(6), s14, Variant::Semitotal));

    const std::vector<Vertex> bad{7};
    CHECK_THROWS_AS(check_set(p3, bad, Variant::Plain), Error);
}

TEST_CASE("is_almost_semitotal") {
    const std::vector<Vertex> center{1};
    CHECK(is_almost_semitotal(path_graph(3), center, 1));
    const std::vector<Vertex> h{1, 4, 6};
    CHECK(is_almost_semitotal(path_graph(8), h, 1));
    const std::vector<Vertex> h2{1, 4, 7};
    CHECK_FALSE(is_almost_semitotal(path_graph(8), h2, 1));
    CHECK_THROWS_AS(is_almost_semitotal(path_graph(8), h, 0), Error);
}

TEST_CASE("small optima") {
    CHECK(min_set(path_graph(6), Variant::Plain).value == 2);
    const auto st = min_set(path_graph(6), Variant::Semitotal);
    CHECK(st.value == 3);
    CHECK(st.witness == std::vector<Vertex>{0, 2, 4});
    CHECK(min_set(path_graph(5), Variant::Total).value == 3);
    CHECK(min_set(path_graph(5), Variant::Semitotal).value == 2);
    CHECK(min_set(complete_graph(5), Variant::Semitotal).value == 2);

    CHECK_THROWS_AS(min_set(Graph(0, std::vector<std::pair<Vertex, Vertex>>{}), Variant::Plain),
                    Error);
    CHECK_THROWS_AS(min_set(build_graph(3, {{0, 1}}), Variant::Total), Error);
    CHECK(min_set(build_graph(3, {{0, 1}}), Variant::Plain).value == 2);
}

TEST_CASE("minimum almost semitotal sets") {
    const auto p3 = min_almost_semitotal(path_graph(3), 1);
    CHECK(p3.value == 1);
    CHECK(p3.witness == std::vector<Vertex>{1});
    CHECK(min_almost_semitotal(path_graph(8), 1).value == 3);
    const auto k2 = min_almost_semitotal(path_graph(2), 0);
    CHECK(k2.value == 1);
    CHECK(k2.witness == std::vector<Vertex>{0});

    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_connected_graph(8, 0.15, rng);
        for (Vertex v = 0; v < g.order(); ++v) {
            const auto want = oracle::min_set(g, Variant::Semitotal, v);
            const auto got = min_almost_semitotal(g, v);
            CHECK(got.value == want.value);
            CHECK(got.witness == want.witness);
        }
    }
}

TEST_CASE("constrained search") {
    SearchConstraints no_leaves;
    no_leaves.allowed = std::vector<Vertex>{1, 2, 3, 4};
    const auto r = min_set_constrained(path_graph(6), Variant::Semitotal, no_leaves);
    REQUIRE(r.has_value());
    CHECK(r->value == 3);
    CHECK(r->witness == std::vector<Vertex>{1, 2, 4});

    SearchConstraints only_leaves;
    only_leaves.allowed = std::vector<Vertex>{0, 5};
    CHECK_FALSE(min_set_constrained(path_graph(6), Variant::Plain, only_leaves).has_value());

    const auto all = all_min_sets(path_graph(4), Variant::Plain);
    CHECK(all == std::vector<std::vector<Vertex>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("agreement with subset enumeration on trees") {
    for (int n = 2; n <= 9; ++n) {
        for (const auto& t : enumerate_trees(n)) agree_with_oracle(t);
    }
}

TEST_CASE("agreement with subset enumeration on random graphs") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> order(1, 10);
    for (int i = 0; i < 150; ++i) {
        agree_with_oracle(oracle::random_graph(order(rng), 0.35, rng));
    }
}

TEST_CASE("sandwich inequality") {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_connected_graph(2 + i % 14, 0.1, rng);
        const int a = min_value(g, Variant::Plain);
        const int b = min_value(g, Variant::Semitotal);
        const int c = min_value(g, Variant::Total);
        CHECK(a <= b);
        CHECK(b <= c);
    }
}
