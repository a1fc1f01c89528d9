#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semidom/graph.hpp"

namespace semidom {

/// Every checked statement. The string ids (to_string / parse_claim) are the
/// names used on the command line and in reports.
enum class ClaimId {
    CompleteAndWheel,        // obs2.1: msd(K_n) = msd(W_n) = 3
    PathCycleTable,          // obs2.2: msd(P_n), msd(C_n) by n mod 5
    CompleteBipartiteTable,  // obs2.3: msd(K_{p,q})
    MsdAtMostThree,          // thm2.4
    UniversalVertexMsd,      // cor2.5
    CloseSupportsMsd,        // obs2.6
    FamilyUStructure,        // obs2.7
    AlmostSemitotalSize,     // lem2.8
    LeafFreeOptima,          // obs2.10
    Class3Characterization,  // thm2.12
    DominationRatio,         // thm3.1
    TotalRatio,              // thm3.2
    FamilyTStructure,        // obs3.3
    FamilyTRatio,            // cor3.4
};

std::span<const ClaimId> all_claims();
std::string_view to_string(ClaimId c);
std::optional<ClaimId> parse_claim(std::string_view id);

struct VerifyBounds {
    /// Overrides the claim's main order bound (see default_max_order).
    std::optional<int> max_n;
    /// External graph6 instances; claims over general graphs use them.
    std::vector<Graph> graphs;
    int jobs = 1;
};

/// Default and largest accepted value of the main order bound per claim.
int default_max_order(ClaimId c);
int budget_max_order(ClaimId c);

struct Counterexample {
    std::string graph;    // graph6
    std::string details;
    std::string sort_key; // canonical code for trees, graph6 otherwise
};

inline constexpr std::size_t kCounterexampleCap = 25;

struct VerificationReport {
    ClaimId claim = ClaimId::CompleteAndWheel;
    std::string range;
    int min_order = 0;
    int max_order = 0;
    long instances = 0;
    bool passed = true;
    std::vector<Counterexample> counterexamples;  // sorted, at most the cap
    long counterexamples_total = 0;
    /// Named counts specific to the claim (e.g. fallback invocations).
    std::vector<std::pair<std::string, long>> stats;
    double elapsed_ms = 0.0;

    long stat(std::string_view name) const;
};

/// Runs one claim over its instance range. Deterministic apart from
/// elapsed_ms regardless of jobs. Throws Error when the bound exceeds the
/// claim's budget.
VerificationReport run_verification(ClaimId claim, const VerifyBounds& bounds);

}  // namespace semidom
