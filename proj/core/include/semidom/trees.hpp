#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semidom/graph.hpp"

namespace semidom {

/// Isomorphism-class identifier for a tree. Two trees have equal codes iff
/// they are isomorphic (and, for labeled codes, iff an isomorphism also
/// preserves the labels).
struct CanonicalCode {
    std::string code;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Canonical code together with the vertex order the code was read from.
/// For isomorphic inputs A and B, mapping order_A[i] -> order_B[i] for all i
/// is an isomorphism from A to B.
struct CanonicalForm {
    CanonicalCode code;
    std::vector<Vertex> order;
};

/// AHU encoding rooted at the center; for a bicentral tree the smaller of the
/// two center-rooted encodings wins. `labels`, when non-empty, must have one
/// printable character per vertex and is folded into every node's token.
/// Throws Error if `t` is not a tree.
CanonicalForm canonical_form(const Graph& t, std::span<const char> labels = {});

CanonicalCode canonical_code(const Graph& t);

/// Isomorphism a -> b (as a vertex map indexed by a's ids), or nullopt when
/// the trees are not isomorphic. Labels are respected when both given.
std::optional<std::vector<Vertex>> tree_isomorphism(const Graph& a, const Graph& b,
                                                    std::span<const char> labels_a = {},
                                                    std::span<const char> labels_b = {});

/// Level sequence of a rooted tree: entry i is the depth of vertex i in
/// preorder. Builds the corresponding tree with vertex i = preorder index.
Graph tree_from_level_sequence(std::span<const int> levels);

/// Generates one representative of every free tree of order n, without
/// repetition, using the Wright-Richmond-Odlyzko-McKay successor rule on
/// center-rooted level sequences. Output order is deterministic.
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(int n);

    /// Next tree, or nullopt once the class list is exhausted.
    std::optional<Graph> next();

private:
    bool advance();

    int n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> levels_;
};

std::vector<Graph> enumerate_trees(int n);

/// Calls `visit` on each free tree of order n; stops early if it returns false.
void for_each_tree(int n, const std::function<bool(const Graph&)>& visit);

}  // namespace semidom
