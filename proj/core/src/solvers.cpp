#include "semidom/solvers.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace semidom {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::Total: return "total";
        case Variant::Semitotal: return "semitotal";
    }
    return "?";
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : set) {
        if (!g.contains(v)) {
            throw Error("vertex " + std::to_string(v) + " is out of range");
        }
        in[v] = 1;
    }
    return in;
}

bool dominates(const Graph& g, const std::vector<char>& in) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in[v]) {
            continue;
        }
        const auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return in[u] != 0; })) {
            return false;
        }
    }
    return true;
}

// Some other member of the set lies within distance 2 of v.
bool has_partner(const Graph& g, const std::vector<char>& in, Vertex v) {
    for (Vertex u : g.neighbors(v)) {
        if (in[u]) {
            return true;
        }
        for (Vertex w : g.neighbors(u)) {
            if (w != v && in[w]) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

bool check_set(const Graph& g, std::span<const Vertex> set, Variant variant) {
    const auto in = membership(g, set);
    switch (variant) {
        case Variant::Plain:
            return dominates(g, in);
        case Variant::Total:
            for (Vertex v = 0; v < g.order(); ++v) {
                const auto nb = g.neighbors(v);
                if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return in[u] != 0; })) {
                    return false;
                }
            }
            return true;
        case Variant::Semitotal:
            if (!dominates(g, in)) {
                return false;
            }
            for (Vertex v = 0; v < g.order(); ++v) {
                if (in[v] && !has_partner(g, in, v)) {
                    return false;
                }
            }
            return true;
    }
    return false;
}

bool is_almost_semitotal(const Graph& g, std::span<const Vertex> set, Vertex exempt) {
    const auto in = membership(g, set);
    if (!g.contains(exempt) || !in[exempt]) {
        throw Error("exempt vertex " + std::to_string(exempt) + " is not in the set");
    }
    if (!dominates(g, in)) {
        return false;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (v != exempt && in[v] && !has_partner(g, in, v)) {
            return false;
        }
    }
    return true;
}

namespace {

using Mask = std::uint64_t;

constexpr int kMaxOrder = 64;

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Vertex> to_vertices(Mask m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Sorted-sequence lexicographic order on equal-size sets: the smallest vertex
// in the symmetric difference decides.
bool lex_less(Mask a, Mask b) {
    const Mask diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

// Exact search by iterative deepening on set size. Each node picks one unmet
// obligation (an undominated vertex, or a member without a partner within
// distance 2) and branches on the vertices that would meet it, excluding
// earlier siblings so every set is reached at most once.
class SetSearch {
public:
    SetSearch(const Graph& g, Variant variant, const SearchConstraints& c)
        : n_(g.order()), variant_(variant) {
        if (n_ > kMaxOrder) {
            throw Error("exact solver supports at most 64 vertices");
        }
        full_ = n_ == kMaxOrder ? ~Mask{0} : (bit(n_) - 1);
        cover_.assign(static_cast<std::size_t>(n_), 0);
        ball2_.assign(static_cast<std::size_t>(n_), 0);
        for (Vertex v = 0; v < n_; ++v) {
            Mask open = 0;
            for (Vertex u : g.neighbors(v)) {
                open |= bit(u);
            }
            cover_[v] = variant == Variant::Total ? open : (open | bit(v));
            Mask two = open;
            for (Vertex u : g.neighbors(v)) {
                for (Vertex w : g.neighbors(u)) {
                    two |= bit(w);
                }
            }
            ball2_[v] = two & ~bit(v);
        }
        allowed_ = full_;
        if (c.allowed) {
            allowed_ = 0;
            for (Vertex v : *c.allowed) {
                check_vertex(v);
                allowed_ |= bit(v);
            }
        }
        for (Vertex v : c.forced) {
            check_vertex(v);
            forced_ |= bit(v);
        }
        if (c.exempt) {
            check_vertex(*c.exempt);
            exempt_ = bit(*c.exempt);
        }
    }

    std::uint64_t explored() const { return explored_; }

    /// Smallest admissible size, or nullopt.
    std::optional<int> optimum() {
        const int hi = std::popcount((allowed_ | forced_) & full_);
        for (int size = std::popcount(forced_); size <= hi; ++size) {
            bool found = false;
            run(size, [&](Mask) {
                found = true;
                return true;
            });
            if (found) {
                return size;
            }
        }
        return std::nullopt;
    }

    /// Visits every admissible set of exactly `size` vertices, assuming no
    /// smaller one exists. The visitor returns true to stop.
    template <class Visit>
    void run(int size, Visit&& visit) {
        const int k = size - std::popcount(forced_);
        if (k < 0) {
            return;
        }
        Mask dom = 0;
        for (Mask m = forced_; m; m &= m - 1) {
            dom |= cover_[std::countr_zero(m)];
        }
        dfs(forced_, dom, k, allowed_ & ~forced_, visit);
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) {
            throw Error("vertex " + std::to_string(v) + " is out of range");
        }
    }

    template <class Visit>
    bool dfs(Mask set, Mask dom, int budget, Mask allowed, Visit& visit) {
        ++explored_;
        const Mask need = full_ & ~dom;
        Mask cands = 0;
        if (need) {
            if (budget == 0) {
                return false;
            }
            // Counting bound: no single vertex covers more than `best` of the
            // remaining undominated vertices.
            int best = 0;
            for (Mask m = allowed; m; m &= m - 1) {
                best = std::max(best, std::popcount(cover_[std::countr_zero(m)] & need));
            }
            if (best == 0 || std::popcount(need) > budget * best) {
                return false;
            }
            int fewest = kMaxOrder + 1;
            for (Mask m = need; m; m &= m - 1) {
                const Vertex u = std::countr_zero(m);
                // cover_ is symmetric, so the coverers of u are cover_[u].
                const Mask c = cover_[u] & allowed;
                const int cnt = std::popcount(c);
                if (cnt < fewest) {
                    fewest = cnt;
                    cands = c;
                    if (cnt == 0) {
                        return false;
                    }
                }
            }
        } else if (variant_ == Variant::Semitotal) {
            int fewest = kMaxOrder + 1;
            for (Mask m = set & ~exempt_; m; m &= m - 1) {
                const Vertex w = std::countr_zero(m);
                if (ball2_[w] & set) {
                    continue;
                }
                const Mask c = ball2_[w] & allowed;
                const int cnt = std::popcount(c);
                if (cnt < fewest) {
                    fewest = cnt;
                    cands = c;
                }
            }
            if (fewest > kMaxOrder) {
                return visit(set);
            }
            if (budget == 0 || cands == 0) {
                return false;
            }
        } else {
            return visit(set);
        }

        for (Mask m = cands; m; m &= m - 1) {
            const Mask b = m & (~m + 1);
            const Vertex c = std::countr_zero(b);
            allowed &= ~b;
            if (dfs(set | b, dom | cover_[c], budget - 1, allowed, visit)) {
                return true;
            }
        }
        return false;
    }

    int n_;
    Variant variant_;
    Mask full_ = 0;
    Mask allowed_ = 0;
    Mask forced_ = 0;
    Mask exempt_ = 0;
    std::vector<Mask> cover_;
    std::vector<Mask> ball2_;
    std::uint64_t explored_ = 0;
};

void require_solvable(const Graph& g, Variant variant) {
    if (g.order() == 0) {
        throw Error("graph is empty");
    }
    if (variant != Variant::Plain && has_isolated_vertex(g)) {
        throw Error("graph has an isolated vertex");
    }
}

std::optional<SolveResult> solve(const Graph& g, Variant variant, const SearchConstraints& c) {
    require_solvable(g, variant);
    SetSearch search(g, variant, c);
    const auto size = search.optimum();
    if (!size) {
        return std::nullopt;
    }
    Mask best = 0;
    bool any = false;
    search.run(*size, [&](Mask m) {
        if (!any || lex_less(m, best)) {
            best = m;
            any = true;
        }
        return false;
    });
    return SolveResult{variant, *size, to_vertices(best), search.explored()};
}

}  // namespace

SolveResult min_set(const Graph& g, Variant variant) {
    auto r = solve(g, variant, {});
    if (!r) {
        throw Error("no admissible set exists");
    }
    return *r;
}

int min_value(const Graph& g, Variant variant) {
    require_solvable(g, variant);
    SetSearch search(g, variant, {});
    const auto size = search.optimum();
    if (!size) {
        throw Error("no admissible set exists");
    }
    return *size;
}

SolveResult min_almost_semitotal(const Graph& g, Vertex v) {
    if (!g.contains(v)) {
        throw Error("vertex " + std::to_string(v) + " is out of range");
    }
    SearchConstraints c;
    c.forced = {v};
    c.exempt = v;
    auto r = solve(g, Variant::Semitotal, c);
    if (!r) {
        throw Error("no admissible set exists");
    }
    return *r;
}

std::optional<SolveResult> min_set_constrained(const Graph& g, Variant variant,
                                               const SearchConstraints& constraints) {
    return solve(g, variant, constraints);
}

std::vector<std::vector<Vertex>> all_min_sets(const Graph& g, Variant variant,
                                              const SearchConstraints& constraints) {
    require_solvable(g, variant);
    SetSearch search(g, variant, constraints);
    const auto size = search.optimum();
    std::vector<Mask> found;
    if (size) {
        search.run(*size, [&](Mask m) {
            found.push_back(m);
            return false;
        });
    }
    std::sort(found.begin(), found.end(), lex_less);
    std::vector<std::vector<Vertex>> out;
    out.reserve(found.size());
    for (Mask m : found) {
        out.push_back(to_vertices(m));
    }
    return out;
}

}  // namespace semidom
