#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "semidom/trees.hpp"

using namespace semidom;

TEST_CASE("free tree counts") {
    // unlabeled trees on n vertices, n = 1..12
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const auto trees = enumerate_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        std::set<CanonicalCode> codes;
        for (const auto& t : trees) {
            CHECK(t.order() == n);
            CHECK(is_tree(t));
            codes.insert(canonical_code(t));
        }
        CHECK(codes.size() == trees.size());
    }
}

TEST_CASE("free tree counts agree with the Pruefer oracle") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(enumerate_trees(n).size() == oracle::count_free_trees(n));
    }
}

TEST_CASE("canonical code equality matches the naive oracle") {
    for (int n = 1; n <= 9; ++n) {
        const auto trees = enumerate_trees(n);
        std::set<std::string> naive;
        for (const auto& t : trees) naive.insert(oracle::naive_tree_code(t));
        CHECK(naive.size() == trees.size());
    }
}

TEST_CASE("canonical code is stable under relabeling") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> order(1, 16);
    for (int i = 0; i < 100; ++i) {
        const Graph t = oracle::random_tree(order(rng), rng);
        const auto code = canonical_code(t);
        for (int j = 0; j < 100; ++j) {
            const auto perm = oracle::random_permutation(t.order(), rng);
            const Graph u = relabel(t, perm);
            REQUIRE(canonical_code(u) == code);
            if (j % 25 == 0) {
                const auto iso = tree_isomorphism(t, u);
                REQUIRE(iso.has_value());
                for (const auto& e : t.edges()) {
                    CHECK(u.adjacent((*iso)[e.u], (*iso)[e.v]));
                }
            }
        }
    }
}

TEST_CASE("labeled isomorphism respects labels") {
    const Graph p3 = path_graph(3);
    const std::vector<char> cac{'C', 'A', 'C'};
    const std::vector<char> acc{'A', 'C', 'C'};
    const std::vector<char> cca{'C', 'C', 'A'};
    CHECK_FALSE(tree_isomorphism(p3, p3, cac, acc).has_value());
    const auto iso = tree_isomorphism(p3, p3, acc, cca);
    REQUIRE(iso.has_value());
    CHECK((*iso)[0] == 2);
    CHECK(canonical_form(p3, acc).code == canonical_form(p3, cca).code);
    CHECK(canonical_form(p3, acc).code != canonical_form(p3, cac).code);
}

TEST_CASE("non-trees are rejected") {
    CHECK_THROWS_AS(canonical_code(cycle_graph(4)), Error);
    CHECK_FALSE(tree_isomorphism(path_graph(4), star_graph(3)).has_value());
}

TEST_CASE("level sequences") {
    const std::vector<int> levels{0, 1, 2, 1};
    const Graph t = tree_from_level_sequence(levels);
    CHECK(t == build_graph(4, {{0, 1}, {1, 2}, {0, 3}}));
}

TEST_CASE("early stop") {
    int seen = 0;
    for_each_tree(10, [&](const Graph&) { return ++seen < 5; });
    CHECK(seen == 5);
}
