// End-to-end acceptance run: one PASS/FAIL line per criterion. Exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "semidom/families.hpp"
#include "semidom/formats.hpp"
#include "semidom/msd.hpp"
#include "semidom/solvers.hpp"
#include "semidom/trees.hpp"
#include "semidom/verify.hpp"

#ifndef SEMIDOM_CONNECTED_G6
#error "SEMIDOM_CONNECTED_G6 must name the connected-graph stream"
#endif

using namespace semidom;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) {
        out.pass = false;
        out.detail += "; over the " + std::to_string(static_cast<int>(limit_s)) + " s limit";
    }
    failures += !out.pass;
    std::printf("%s [%2d] %s (%s; %.2f s)\n", out.pass ? "PASS" : "FAIL", id, title,
                out.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string summary(const VerificationReport& r) {
    std::string s = std::to_string(r.instances) + " instances, " +
                    std::to_string(r.counterexamples_total) + " counterexamples";
    if (!r.counterexamples.empty()) {
        s += ", first " + r.counterexamples.front().graph + ": " + r.counterexamples.front().details;
    }
    return s;
}

Outcome claim(ClaimId id, const VerifyBounds& bounds) {
    const auto r = run_verification(id, bounds);
    return {r.passed, summary(r)};
}

std::vector<Graph> load_stream() {
    std::ifstream in(SEMIDOM_CONNECTED_G6);
    if (!in) {
        throw Error("cannot open " + std::string(SEMIDOM_CONNECTED_G6));
    }
    return read_graph6_stream(in);
}

// Sandwich inequality gamma <= gamma_t2 <= gamma_t; counts instances checked.
long sandwich_violations = 0;
long sandwich_checked = 0;

void sandwich(const Graph& g) {
    if (g.order() == 0 || has_isolated_vertex(g)) {
        return;
    }
    const int a = min_value(g, Variant::Plain);
    const int b = min_value(g, Variant::Semitotal);
    const int c = min_value(g, Variant::Total);
    ++sandwich_checked;
    sandwich_violations += !(a <= b && b <= c);
}

}  // namespace

int main() {
    VerifyBounds defaults;
    VerifyBounds with_stream;
    with_stream.graphs = load_stream();

    criterion(1, "msd of K_n and W_n is 3 for 3 <= n <= 10", 30,
              [&] { return claim(ClaimId::CompleteAndWheel, defaults); });
    criterion(2, "msd of P_n and C_n follows the mod-5 table for 3 <= n <= 20", 180,
              [&] { return claim(ClaimId::PathCycleTable, defaults); });
    criterion(3, "msd of K_{p,q} for 1 <= p <= q <= 5", 60,
              [&] { return claim(ClaimId::CompleteBipartiteTable, defaults); });
    criterion(4, "msd <= 3 on trees 3..12 and connected graphs n <= 7", 300, [&] {
        const auto r = run_verification(ClaimId::MsdAtMostThree, with_stream);
        // 985 trees of order 3..12, 994 connected graphs of order 3..7
        const bool counts_ok = r.instances == 985 + 994;
        return Outcome{r.passed && counts_ok, summary(r) + (counts_ok ? "" : ", unexpected instance count")};
    });
    criterion(5, "msd = 3 for graphs with a universal vertex (n <= 7 stream)", 0,
              [&] { return claim(ClaimId::UniversalVertexMsd, with_stream); });
    criterion(6, "msd <= 2 for trees n <= 12 with close support vertices", 0,
              [&] { return claim(ClaimId::CloseSupportsMsd, defaults); });
    criterion(7, "Class 3 trees n <= 12 are exactly the members of U; shallow non-stars have msd <= 2", 300,
              [&] { return claim(ClaimId::Class3Characterization, defaults); });
    criterion(8, "U (n <= 12), T and T1 (n <= 14) labelings are valid; T members have gamma_t2 = 2gamma - 1", 0,
              [&] {
                  const auto u = run_verification(ClaimId::FamilyUStructure, defaults);
                  const auto t = run_verification(ClaimId::FamilyTStructure, defaults);
                  const auto r = run_verification(ClaimId::FamilyTRatio, defaults);
                  return Outcome{u.passed && t.passed && r.passed,
                                 "U: " + summary(u) + "; T/T1: " + summary(t) + "; ratio: " + summary(r)};
              });
    criterion(9, "almost semitotal sets of size gamma_t2 - 1 for every A-vertex of U (n <= 12)", 0, [&] {
        const auto r = run_verification(ClaimId::AlmostSemitotalSize, defaults);
        return Outcome{r.passed, summary(r) + ", " + std::to_string(r.stat("pairs")) + " pairs, " +
                                     std::to_string(r.stat("fallbacks")) + " fallbacks"};
    });
    criterion(10, "gamma_t2 <= 2gamma - 1 on non-star trees n <= 14, equality exactly on T", 300,
              [&] { return claim(ClaimId::DominationRatio, defaults); });
    criterion(11, "gamma_t <= 2gamma_t2 - 1 on trees 2..14, equality exactly on T1", 300,
              [&] { return claim(ClaimId::TotalRatio, defaults); });

    criterion(12, "exact solvers match subset enumeration; gamma <= gamma_t2 <= gamma_t", 0, [&] {
        long compared = 0;
        long mismatches = 0;
        auto compare = [&](const Graph& g) {
            for (Variant var : {Variant::Plain, Variant::Total, Variant::Semitotal}) {
                if (var != Variant::Plain && has_isolated_vertex(g)) continue;
                const auto want = oracle::min_set(g, var);
                const auto got = min_set(g, var);
                ++compared;
                mismatches += got.value != want.value ||
                              got.witness != std::vector<Vertex>(want.witness.begin(), want.witness.end());
            }
        };
        for (int n = 1; n <= 10; ++n) {
            for_each_tree(n, [&](const Graph& t) {
                compare(t);
                return true;
            });
        }
        std::mt19937 rng(20240601);
        std::uniform_int_distribution<int> order(2, 10);
        std::uniform_real_distribution<double> density(0.0, 0.6);
        std::vector<Graph> random_graphs;
        for (int i = 0; i < 200; ++i) {
            random_graphs.push_back(oracle::random_connected_graph(order(rng), density(rng), rng));
            compare(random_graphs.back());
        }

        // every instance the suite solves directly
        for (int n = 1; n <= 14; ++n) {
            for_each_tree(n, [&](const Graph& t) {
                sandwich(t);
                return true;
            });
        }
        for (const auto& g : with_stream.graphs) sandwich(g);
        for (const auto& g : random_graphs) sandwich(g);
        for (int n = 3; n <= 20; ++n) {
            sandwich(path_graph(n));
            sandwich(cycle_graph(n));
            if (n <= 10) {
                sandwich(complete_graph(n));
                sandwich(wheel_graph(n));
            }
        }
        for (FamilyId f : {FamilyId::U, FamilyId::T, FamilyId::T1}) {
            for (const auto& [code, list] : generate_family(f, f == FamilyId::U ? 12 : 14).members) {
                for (const auto& m : list) sandwich(m.labeled.tree);
            }
        }
        return Outcome{mismatches == 0 && sandwich_violations == 0,
                       std::to_string(compared) + " oracle comparisons, " + std::to_string(mismatches) +
                           " mismatches; sandwich on " + std::to_string(sandwich_checked) + " graphs, " +
                           std::to_string(sandwich_violations) + " violations"};
    });

    criterion(13, "graph6 and edge-list round trips", 0, [&] {
        long checked = 0;
        long bad = 0;
        auto round_trip = [&](const Graph& g) {
            ++checked;
            bad += !(parse_graph6(encode_graph6(g)) == g) || !(parse_edgelist(encode_edgelist(g)) == g);
        };
        for (int n = 1; n <= 10; ++n) {
            for_each_tree(n, [&](const Graph& t) {
                round_trip(t);
                return true;
            });
        }
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> order(1, 20);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        for (int i = 0; i < 500; ++i) {
            round_trip(oracle::random_graph(order(rng), density(rng), rng));
        }
        return Outcome{bad == 0, std::to_string(checked) + " graphs, " + std::to_string(bad) + " failures"};
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
