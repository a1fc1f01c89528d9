#include "semidom/msd.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "semidom/solvers.hpp"

namespace semidom {

MsdSearchExhausted::MsdSearchExhausted(int k_max, std::vector<MsdRow> table)
    : Error("no single-edge subdivision with k <= " + std::to_string(k_max) +
            " increases the semitotal domination number"),
      table_(std::move(table)) {}

std::string_view to_string(TreeClass c) {
    switch (c) {
        case TreeClass::Class1: return "class1";
        case TreeClass::Class2: return "class2";
        case TreeClass::Class3: return "class3";
    }
    return "?";
}

MsdResult msd_semitotal(const Graph& g, int k_max) {
    if (k_max < 1) {
        throw Error("k_max must be positive");
    }
    if (g.order() < 2 || !is_connected(g)) {
        throw Error("multisubdivision number needs a connected graph of order >= 2");
    }
    MsdResult result;
    result.base_value = min_value(g, Variant::Semitotal);

    for (int k = 1; k <= k_max; ++k) {
        MsdRow row{k, 0, 0};
        std::optional<Edge> witness;
        bool first = true;
        for (const Edge& e : g.edges()) {
            const int value = min_value(subdivide_edge(g, e, k), Variant::Semitotal);
            row.min_value = first ? value : std::min(row.min_value, value);
            row.max_value = first ? value : std::max(row.max_value, value);
            first = false;
            if (!witness && value > result.base_value) {
                witness = e;
            }
        }
        result.table.push_back(row);
        if (witness) {
            result.k = k;
            result.witness_edge = *witness;
            return result;
        }
    }
    throw MsdSearchExhausted(k_max, std::move(result.table));
}

TreeClass classify_tree(const Graph& t) {
    if (!is_tree(t)) {
        throw Error("classify_tree needs a tree");
    }
    if (t.order() < 3) {
        throw Error("classify_tree needs order >= 3");
    }
    return static_cast<TreeClass>(msd_semitotal(t, 3).k);
}

}  // namespace semidom
