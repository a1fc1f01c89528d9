#include "semidom/trees.hpp"

#include <algorithm>
#include <utility>

namespace semidom {

namespace {

struct Rooted {
    std::string code;
    std::vector<Vertex> order;
};

Rooted encode_rooted(const Graph& t, Vertex v, Vertex parent, std::span<const char> labels) {
    std::vector<Rooted> kids;
    for (Vertex w : t.neighbors(v)) {
        if (w != parent) {
            kids.push_back(encode_rooted(t, w, v, labels));
        }
    }
    std::sort(kids.begin(), kids.end(),
              [](const Rooted& a, const Rooted& b) { return a.code < b.code; });
    Rooted out;
    out.code.push_back('(');
    if (!labels.empty()) {
        out.code.push_back(labels[v]);
    }
    out.order.push_back(v);
    for (auto& k : kids) {
        out.code += k.code;
        out.order.insert(out.order.end(), k.order.begin(), k.order.end());
    }
    out.code.push_back(')');
    return out;
}

std::vector<Vertex> tree_centers(const Graph& t) {
    const int n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            all[v] = v;
        }
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) {
            layer.push_back(v);
        }
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex leaf : layer) {
            deg[leaf] = 0;
            for (Vertex w : t.neighbors(leaf)) {
                if (deg[w] > 0 && --deg[w] == 1) {
                    next.push_back(w);
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

CanonicalForm canonical_form(const Graph& t, std::span<const char> labels) {
    if (!is_tree(t)) {
        throw Error("canonical code requires a tree");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != t.order()) {
        throw Error("label count does not match tree order");
    }
    std::optional<Rooted> best;
    for (Vertex c : tree_centers(t)) {
        Rooted r = encode_rooted(t, c, -1, labels);
        if (!best || r.code < best->code) {
            best = std::move(r);
        }
    }
    return CanonicalForm{CanonicalCode{std::move(best->code)}, std::move(best->order)};
}

CanonicalCode canonical_code(const Graph& t) { return canonical_form(t).code; }

std::optional<std::vector<Vertex>> tree_isomorphism(const Graph& a, const Graph& b,
                                                    std::span<const char> labels_a,
                                                    std::span<const char> labels_b) {
    if (a.order() != b.order() || labels_a.empty() != labels_b.empty()) {
        return std::nullopt;
    }
    const auto fa = canonical_form(a, labels_a);
    const auto fb = canonical_form(b, labels_b);
    if (fa.code != fb.code) {
        return std::nullopt;
    }
    std::vector<Vertex> map(static_cast<std::size_t>(a.order()));
    for (std::size_t i = 0; i < fa.order.size(); ++i) {
        map[fa.order[i]] = fb.order[i];
    }
    return map;
}

Graph tree_from_level_sequence(std::span<const int> levels) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> stack;
    for (Vertex i = 0; i < static_cast<Vertex>(levels.size()); ++i) {
        while (!stack.empty() && levels[stack.back()] >= levels[i]) {
            stack.pop_back();
        }
        if (!stack.empty()) {
            edges.emplace_back(stack.back(), i);
        }
        stack.push_back(i);
    }
    return Graph(static_cast<int>(levels.size()), edges);
}

// Level-sequence machinery. A sequence L is a rooted tree in preorder with
// L[0] = 0 for the root.
namespace {

// Beyer-Hedetniemi successor. With p < 0, p is the last index whose level
// exceeds 1. Returns false when L is the last sequence (a star).
bool next_rooted(std::vector<int>& levels, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(levels.size()) - 1;
        while (p > 0 && levels[p] == 1) {
            --p;
        }
    }
    if (p == 0) {
        return false;
    }
    int q = p - 1;
    while (levels[q] != levels[p] - 1) {
        --q;
    }
    for (std::size_t i = static_cast<std::size_t>(p); i < levels.size(); ++i) {
        levels[i] = levels[i - p + q];
    }
    return true;
}

struct Split {
    std::vector<int> left;  // first subtree of the root, re-rooted
    std::vector<int> rest;  // the tree with that subtree removed
};

Split split_first_subtree(const std::vector<int>& levels) {
    std::size_t m = levels.size();
    for (std::size_t i = 2; i < levels.size(); ++i) {
        if (levels[i] == 1) {
            m = i;
            break;
        }
    }
    Split s;
    for (std::size_t i = 1; i < m; ++i) {
        s.left.push_back(levels[i] - 1);
    }
    s.rest.push_back(0);
    s.rest.insert(s.rest.end(), levels.begin() + static_cast<std::ptrdiff_t>(m), levels.end());
    return s;
}

int height(const std::vector<int>& levels) {
    return *std::max_element(levels.begin(), levels.end());
}

// A center-rooted sequence is canonical for its free tree iff the first
// subtree is not taller than the remainder, and on equal height is not larger
// in (size, lexicographic) order.
bool is_free_canonical(const Split& s) {
    const int lh = height(s.left);
    const int rh = height(s.rest);
    if (rh < lh) {
        return false;
    }
    if (rh == lh) {
        if (s.left.size() > s.rest.size()) {
            return false;
        }
        if (s.left.size() == s.rest.size() && s.left > s.rest) {
            return false;
        }
    }
    return true;
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
    if (n < 1) {
        throw Error("tree order must be at least 1");
    }
    if (n >= 2) {
        // path rooted at its center
        for (int i = 0; i <= n / 2; ++i) {
            levels_.push_back(i);
        }
        for (int i = 1; i < (n + 1) / 2; ++i) {
            levels_.push_back(i);
        }
    }
}

// Moves levels_ to the next free-canonical sequence; false when exhausted.
bool FreeTreeGenerator::advance() {
    if (!started_) {
        started_ = true;
    } else if (!next_rooted(levels_)) {
        return false;
    }
    const Split s = split_first_subtree(levels_);
    if (is_free_canonical(s)) {
        return true;
    }
    // Skip ahead: replace the first subtree by its successor and reset the
    // tail so the remainder is as tall as the new first subtree requires.
    const int p = static_cast<int>(s.left.size());
    const bool reset_tail = levels_[p] > 2;
    if (!next_rooted(levels_, p)) {
        return false;
    }
    if (reset_tail) {
        const int lh = height(split_first_subtree(levels_).left);
        const std::size_t len = static_cast<std::size_t>(lh + 1);
        for (std::size_t i = 0; i < len; ++i) {
            levels_[levels_.size() - len + i] = static_cast<int>(i) + 1;
        }
    }
    return true;
}

std::optional<Graph> FreeTreeGenerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (n_ == 1) {
        done_ = true;
        return Graph(1, std::vector<std::pair<Vertex, Vertex>>{});
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return tree_from_level_sequence(levels_);
}

std::vector<Graph> enumerate_trees(int n) {
    std::vector<Graph> out;
    FreeTreeGenerator gen(n);
    while (auto t = gen.next()) {
        out.push_back(std::move(*t));
    }
    return out;
}

void for_each_tree(int n, const std::function<bool(const Graph&)>& visit) {
    FreeTreeGenerator gen(n);
    while (auto t = gen.next()) {
        if (!visit(*t)) {
            return;
        }
    }
}

}  // namespace semidom
