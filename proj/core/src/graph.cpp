#include "semidom/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace semidom {

Edge Edge::make(Vertex a, Vertex b) {
    if (a == b) {
        throw Error("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) {
        throw Error("negative vertex count");
    }
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw Error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has an endpoint outside 0.." + std::to_string(n - 1));
        }
        edges_.push_back(Edge::make(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
    }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) {
        return false;
    }
    const auto& list = adj_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        out.emplace_back(e.u, e.v);
    }
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return Graph(n, edges);
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw Error(what);
    }
}

}  // namespace

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, e);
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

Graph complete_bipartite_graph(int p, int q) {
    require(p >= 1 && q >= 1, "complete bipartite graph needs p, q >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < p; ++i) {
        for (Vertex j = 0; j < q; ++j) {
            e.emplace_back(i, p + j);
        }
    }
    return Graph(p + q, e);
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    return complete_bipartite_graph(1, leaves);
}

Graph wheel_graph(int rim) {
    require(rim >= 3, "wheel needs a rim of length >= 3");
    auto e = cycle_graph(rim).edge_pairs();
    for (Vertex i = 0; i < rim; ++i) {
        e.emplace_back(i, rim);
    }
    return Graph(rim + 1, e);
}

Graph named_graph(GraphKind kind, int a, int b) {
    switch (kind) {
        case GraphKind::Path: return path_graph(a);
        case GraphKind::Cycle: return cycle_graph(a);
        case GraphKind::Complete: return complete_graph(a);
        case GraphKind::CompleteBipartite: return complete_bipartite_graph(a, b);
        case GraphKind::Star: return star_graph(a);
        case GraphKind::Wheel: return wheel_graph(a);
    }
    throw Error("unknown graph kind");
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(n, -1));
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        auto& row = dist[s];
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (row[y] < 0) {
                    row[y] = row[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
            return true;
        }
    }
    return false;
}

StructuralProfile structural_profile(const Graph& g) {
    StructuralProfile p;
    const int n = g.order();
    std::vector<char> support(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            p.leaves.push_back(v);
            support[g.neighbors(v)[0]] = 1;
        }
        if (g.degree(v) == n - 1) {
            p.universal.push_back(v);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (support[v]) {
            p.supports.push_back(v);
        }
    }

    p.is_connected = is_connected(g);
    if (p.is_connected) {
        int diam = 0;
        for (const auto& row : distance_matrix(g)) {
            diam = std::max(diam, *std::max_element(row.begin(), row.end()));
        }
        p.diameter = diam;
    }
    p.is_tree = p.is_connected && g.size() == n - 1;
    p.is_star = p.is_tree && n >= 2 && !p.universal.empty();
    return p;
}

Graph subdivide_edge(const Graph& g, const Edge& e, int k) {
    if (k < 1) {
        throw Error("subdivision count must be positive");
    }
    if (!g.has_edge(e)) {
        throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") is not in the graph");
    }
    const int n = g.order();
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(g.size() + k));
    for (const auto& f : g.edges()) {
        if (f != e) {
            out.emplace_back(f.u, f.v);
        }
    }
    Vertex prev = e.u;
    for (int i = 0; i < k; ++i) {
        out.emplace_back(prev, n + i);
        prev = n + i;
    }
    out.emplace_back(prev, e.v);
    return Graph(n + k, out);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) {
        throw Error("permutation size does not match graph order");
    }
    std::vector<char> hit(perm.size(), 0);
    for (Vertex v : perm) {
        if (v < 0 || v >= g.order() || hit[v]) {
            throw Error("relabel expects a permutation of 0..n-1");
        }
        hit[v] = 1;
    }
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(g.size()));
    for (const auto& e : g.edges()) {
        out.emplace_back(perm[e.u], perm[e.v]);
    }
    return Graph(g.order(), out);
}

}  // namespace semidom
