#include <doctest.h>

#include <set>

#include "semidom/families.hpp"
#include "semidom/msd.hpp"
#include "semidom/solvers.hpp"

using namespace semidom;

TEST_CASE("seeds") {
    CHECK(seed(FamilyId::U).status_string() == "CAC");
    CHECK(seed(FamilyId::U).tree == path_graph(3));
    CHECK(seed(FamilyId::T).status_string() == "CADEBC");
    CHECK(seed(FamilyId::T).tree == path_graph(6));
    CHECK(seed(FamilyId::T1).status_string() == "CBDAC");
    CHECK(seed(FamilyId::T1).tree == path_graph(5));
}

TEST_CASE("operations") {
    const auto p8 = apply_operation(seed(FamilyId::U), Operation::P3, 2);
    CHECK(p8.tree == path_graph(8));
    CHECK(p8.status_string() == "CACBBCAC");

    const auto star = apply_operation(seed(FamilyId::U), Operation::P1, 1);
    CHECK(canonical_code(star.tree) == canonical_code(star_graph(3)));
    CHECK(star.status_string() == "CACC");

    const auto t10 = apply_operation(seed(FamilyId::T), Operation::O2, 1);
    CHECK(t10.tree.order() == 10);
    CHECK(t10.status_string() == "CADEBCDEBC");
    CHECK(t10.tree.adjacent(1, 6));
    CHECK(t10.tree.adjacent(8, 9));

    CHECK_THROWS_AS(apply_operation(seed(FamilyId::U), Operation::P1, 0), Error);
    CHECK_THROWS_AS(apply_operation(seed(FamilyId::U), Operation::P2, 1), Error);
    CHECK(accepts(Operation::O1, Status::B));
    CHECK_FALSE(accepts(Operation::O3, Status::B));
}

TEST_CASE("derivation text round trip") {
    const auto d = parse_derivation(FamilyId::U, "P3@2;P1@1");
    CHECK(d.steps.size() == 2);
    CHECK(d.to_string() == "P3@2;P1@1");
    CHECK(parse_derivation(FamilyId::T, "-").steps.empty());
    CHECK(replay(d).tree.order() == 9);
    CHECK_THROWS_AS(parse_derivation(FamilyId::U, "Q1@0"), Error);
    CHECK_THROWS_AS(replay(parse_derivation(FamilyId::U, "O1@1")), Error);
}

TEST_CASE("small catalogs") {
    const auto u3 = generate_family(FamilyId::U, 3);
    CHECK(u3.member_count() == 1);
    CHECK(generate_family(FamilyId::T, 6).member_count() == 1);
    CHECK(generate_family(FamilyId::T1, 5).member_count() == 1);
    CHECK(generate_family(FamilyId::T, 5).member_count() == 0);
}

TEST_CASE("catalog members replay exactly") {
    for (FamilyId f : {FamilyId::U, FamilyId::T, FamilyId::T1}) {
        const auto cat = generate_family(f, 11);
        for (const auto& [code, list] : cat.members) {
            for (const auto& m : list) {
                CHECK(canonical_code(m.labeled.tree) == code);
                REQUIRE_FALSE(m.derivations.empty());
                for (const auto& rec : m.derivations) {
                    const auto r = replay(rec.derivation);
                    REQUIRE(rec.to_member.size() == static_cast<std::size_t>(r.tree.order()));
                    for (const auto& e : r.tree.edges()) {
                        CHECK(m.labeled.tree.adjacent(rec.to_member[e.u], rec.to_member[e.v]));
                    }
                    for (Vertex v = 0; v < r.tree.order(); ++v) {
                        CHECK(r.status[v] == m.labeled.status[rec.to_member[v]]);
                    }
                }
            }
        }
    }
}

TEST_CASE("recognition") {
    const auto p8 = recognize(FamilyId::U, path_graph(8), 12);
    REQUIRE(p8.has_value());
    // labeling on the input ids, up to reversal of the path
    const auto s = p8->labeled.status_string();
    CHECK((s == "CACBBCAC" || std::string(s.rbegin(), s.rend()) == "CACBBCAC"));
    CHECK(p8->labeled.tree == path_graph(8));

    CHECK_FALSE(recognize(FamilyId::U, path_graph(7), 12).has_value());
    CHECK(msd_semitotal(path_graph(7)).k == 1);

    const auto p6 = recognize(FamilyId::T, path_graph(6), 12);
    REQUIRE(p6.has_value());
    const auto t = p6->labeled.status_string();
    CHECK((t == "CADEBC" || t == "CBEDAC"));

    CHECK_THROWS_AS(recognize(FamilyId::U, cycle_graph(4), 12), Error);
    CHECK_THROWS_AS(recognize(FamilyId::U, path_graph(13), 12), Error);
}

TEST_CASE("labeling validation") {
    CHECK(validate_labeling(seed(FamilyId::U), FamilyId::U).empty());
    CHECK(validate_labeling(seed(FamilyId::T), FamilyId::T).empty());
    CHECK(validate_labeling(seed(FamilyId::T1), FamilyId::T1).empty());

    const auto bad = make_labeled(path_graph(6), "CBDEAC");
    const auto v = validate_labeling(bad, FamilyId::T);
    bool de_shape = false;
    for (const auto& x : v) de_shape |= x.clause == "de_shape";
    CHECK(de_shape);

    CHECK_THROWS_AS(validate_labeling(make_labeled(path_graph(3), "CDC"), FamilyId::U), Error);
    CHECK_THROWS_AS(make_labeled(path_graph(3), "CA"), Error);
    CHECK_THROWS_AS(make_labeled(path_graph(3), "CXC"), Error);
}

TEST_CASE("almost semitotal construction") {
    CHECK(almost_semitotal_by_derivation(parse_derivation(FamilyId::U, "-"), 1) ==
          std::vector<Vertex>{1});
    CHECK(almost_semitotal_by_derivation(parse_derivation(FamilyId::U, "P3@2"), 1) ==
          std::vector<Vertex>{1, 4, 6});
    CHECK(almost_semitotal_by_derivation(parse_derivation(FamilyId::U, "P1@1"), 1) ==
          std::vector<Vertex>{1});

    const auto d = parse_derivation(FamilyId::U, "P3@2");
    const auto lt = replay(d);
    const auto out = build_almost_semitotal_set(lt, d, 1);
    CHECK_FALSE(out.used_fallback);
    CHECK(out.set == std::vector<Vertex>{1, 4, 6});
    CHECK(static_cast<int>(out.set.size()) == min_value(lt.tree, Variant::Semitotal) - 1);
}

TEST_CASE("almost semitotal construction over the catalog") {
    const auto cat = generate_family(FamilyId::U, 12);
    int fallbacks = 0;
    for (const auto& [code, list] : cat.members) {
        for (const auto& m : list) {
            const int target = min_value(m.labeled.tree, Variant::Semitotal) - 1;
            for (Vertex x : m.labeled.with_status(Status::A)) {
                const auto& rec = earliest_derivation(m, x);
                const auto out = build_almost_semitotal_set(m.labeled, rec.derivation, x, rec.to_member);
                fallbacks += out.used_fallback;
                CHECK(static_cast<int>(out.set.size()) == target);
                CHECK(is_almost_semitotal(m.labeled.tree, out.set, x));
            }
        }
    }
    CHECK(fallbacks == 0);
}
