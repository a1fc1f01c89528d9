#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "semidom/graph.hpp"

namespace semidom {

enum class Variant { Plain, Total, Semitotal };

std::string_view to_string(Variant v);

struct SolveResult {
    Variant variant = Variant::Plain;
    int value = 0;
    std::vector<Vertex> witness;  // sorted ascending
    std::uint64_t explored = 0;   // search nodes visited, diagnostic only
};

/// Plain: every vertex outside S has a neighbor in S. Total: every vertex has
/// a neighbor in S. Semitotal: Plain, and each member of S has another member
/// within distance 2 in G. Throws Error on an out-of-range id.
bool check_set(const Graph& g, std::span<const Vertex> set, Variant variant);

/// S dominates G and every member except `exempt` has a partner in S within
/// distance 2. Throws Error if `exempt` is not in S.
bool is_almost_semitotal(const Graph& g, std::span<const Vertex> set, Vertex exempt);

/// Restrictions for the exact search. Vertices outside `allowed` are never
/// added; vertices in `forced` are always in the set. An empty optional means
/// "no restriction".
struct SearchConstraints {
    std::optional<std::vector<Vertex>> allowed;
    std::vector<Vertex> forced;
    /// Member excused from the distance-2 partner condition (Semitotal only).
    std::optional<Vertex> exempt;
};

/// Minimum set for the variant with the lexicographically least witness
/// among all optimal sets. Graphs of up to 64 vertices are supported.
/// Throws Error on an empty graph, or an isolated vertex for Total and
/// Semitotal.
SolveResult min_set(const Graph& g, Variant variant);

/// Optimum value only; skips the witness tie-break, so it is the fast path
/// for bulk verification.
int min_value(const Graph& g, Variant variant);

/// Minimum almost semitotal dominating set relative to `v` (which the set
/// must contain), lexicographically least among optimal sets.
SolveResult min_almost_semitotal(const Graph& g, Vertex v);

/// Constrained exact search: minimum value and lex-least witness, or nullopt
/// when no admissible set exists.
std::optional<SolveResult> min_set_constrained(const Graph& g, Variant variant,
                                               const SearchConstraints& constraints);

/// Every optimal set under the constraints, each sorted, in lexicographic
/// order. Empty when none is admissible.
std::vector<std::vector<Vertex>> all_min_sets(const Graph& g, Variant variant,
                                              const SearchConstraints& constraints = {});

}  // namespace semidom
