#pragma once

#include <string_view>
#include <vector>

#include "semidom/graph.hpp"

namespace semidom {

/// Semitotal domination numbers after subdividing each edge k times.
struct MsdRow {
    int k = 0;
    int min_value = 0;  // minimum over edges
    int max_value = 0;  // maximum over edges
};

struct MsdResult {
    int k = 0;
    Edge witness_edge;
    int base_value = 0;
    /// One row per k' = 1..k, every edge evaluated.
    std::vector<MsdRow> table;
};

/// No edge subdivision up to k_max raised the semitotal domination number.
class MsdSearchExhausted : public Error {
public:
    MsdSearchExhausted(int k_max, std::vector<MsdRow> table);
    const std::vector<MsdRow>& table() const noexcept { return table_; }

private:
    std::vector<MsdRow> table_;
};

/// Smallest k in 1..k_max such that subdividing some edge k times increases
/// the semitotal domination number; the witness is the least such edge in
/// (u, v) order. Requires a connected graph of order >= 2. Throws
/// MsdSearchExhausted when no k <= k_max works.
MsdResult msd_semitotal(const Graph& g, int k_max = 5);

enum class TreeClass { Class1 = 1, Class2 = 2, Class3 = 3 };

std::string_view to_string(TreeClass c);

/// Class of a tree of order >= 3, i.e. its multisubdivision number.
TreeClass classify_tree(const Graph& t);

}  // namespace semidom
