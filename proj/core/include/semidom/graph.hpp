#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semidom {

using Vertex = int;

/// Raised for every precondition violation in the library (bad input, wrong
/// graph class, unsupported size). Callers that need to distinguish usage
/// errors from failed checks catch this type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge with endpoints stored as u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    /// Normalizes the endpoint order. Throws on a loop.
    static Edge make(Vertex a, Vertex b);

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertex ids 0..n-1.
///
/// Immutable after construction. Edges are kept sorted lexicographically and
/// every adjacency list is sorted ascending, so iteration order is
/// deterministic everywhere.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph, collapsing duplicate edges. Throws Error on a
    /// self-loop, a negative order, or an endpoint outside 0..n-1.
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges)) {}

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }
    bool adjacent(Vertex a, Vertex b) const;
    bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

    /// Edge list as plain pairs, handy for rebuilding modified copies.
    std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Same as the Graph constructor; kept as a free function for symmetry with
/// the other builders.
Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

enum class GraphKind { Path, Cycle, Complete, CompleteBipartite, Star, Wheel };

/// Standard graph families. `a` is the size parameter (p for complete
/// bipartite, number of leaves for a star, rim length for a wheel); `b` is
/// only read for CompleteBipartite.
///
/// Vertex numbering: paths and cycles run 0..n-1 in order; K_{p,q} puts the
/// p side first; a star's center is 0; a wheel's rim is 0..n-1 and its hub
/// is n, so wheel(n) has order n+1 and wheel(3) is K_4.
Graph named_graph(GraphKind kind, int a, int b = 0);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);
Graph star_graph(int leaves);
Graph wheel_graph(int rim);

/// All-pairs BFS distances; -1 marks unreachable pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

struct StructuralProfile {
    std::vector<Vertex> leaves;
    std::vector<Vertex> supports;
    std::vector<Vertex> universal;
    std::optional<int> diameter;  // nullopt when disconnected
    bool is_tree = false;
    bool is_star = false;
    bool is_connected = false;
};

/// Degree-1 vertices, their neighbors, degree n-1 vertices, and the
/// diameter. A star is a tree of order >= 2 with a universal vertex, so K_2
/// counts as a star and K_1 does not.
StructuralProfile structural_profile(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Replaces `e` by a path through `k` new vertices n, n+1, ..., n+k-1 placed
/// from e.u towards e.v. Throws if `e` is not an edge or k < 1.
Graph subdivide_edge(const Graph& g, const Edge& e, int k);

/// Applies a vertex permutation: vertex v of `g` becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace semidom
