#include "semidom/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "semidom/families.hpp"
#include "semidom/formats.hpp"
#include "semidom/msd.hpp"
#include "semidom/solvers.hpp"
#include "semidom/trees.hpp"

namespace semidom {

namespace {

struct ClaimInfo {
    ClaimId id;
    std::string_view name;
    int default_max;
    int budget_max;
};

constexpr std::array kClaims{
    ClaimInfo{ClaimId::CompleteAndWheel, "obs2.1", 10, 20},
    ClaimInfo{ClaimId::PathCycleTable, "obs2.2", 20, 40},
    ClaimInfo{ClaimId::CompleteBipartiteTable, "obs2.3", 5, 10},
    ClaimInfo{ClaimId::MsdAtMostThree, "thm2.4", 12, 14},
    ClaimInfo{ClaimId::UniversalVertexMsd, "cor2.5", 12, 14},
    ClaimInfo{ClaimId::CloseSupportsMsd, "obs2.6", 12, 14},
    ClaimInfo{ClaimId::FamilyUStructure, "obs2.7", 12, 18},
    ClaimInfo{ClaimId::AlmostSemitotalSize, "lem2.8", 12, 16},
    ClaimInfo{ClaimId::LeafFreeOptima, "obs2.10", 9, 16},
    ClaimInfo{ClaimId::Class3Characterization, "thm2.12", 12, 14},
    ClaimInfo{ClaimId::DominationRatio, "thm3.1", 14, 18},
    ClaimInfo{ClaimId::TotalRatio, "thm3.2", 14, 18},
    ClaimInfo{ClaimId::FamilyTStructure, "obs3.3", 14, 18},
    ClaimInfo{ClaimId::FamilyTRatio, "cor3.4", 14, 18},
};

const ClaimInfo& info(ClaimId c) {
    for (const auto& i : kClaims) {
        if (i.id == c) {
            return i;
        }
    }
    throw Error("unknown claim");
}

constexpr std::array<ClaimId, kClaims.size()> claim_ids() {
    std::array<ClaimId, kClaims.size()> out{};
    for (std::size_t i = 0; i < kClaims.size(); ++i) {
        out[i] = kClaims[i].id;
    }
    return out;
}

constexpr auto kClaimIds = claim_ids();

}  // namespace

std::span<const ClaimId> all_claims() { return kClaimIds; }

std::string_view to_string(ClaimId c) { return info(c).name; }

std::optional<ClaimId> parse_claim(std::string_view id) {
    for (const auto& i : kClaims) {
        if (i.name == id) {
            return i.id;
        }
    }
    return std::nullopt;
}

int default_max_order(ClaimId c) { return info(c).default_max; }
int budget_max_order(ClaimId c) { return info(c).budget_max; }

long VerificationReport::stat(std::string_view name) const {
    for (const auto& [k, v] : stats) {
        if (k == name) {
            return v;
        }
    }
    return 0;
}

namespace {

// Outcome of checking one instance.
struct Finding {
    std::vector<Counterexample> failures;
    std::map<std::string, long> counts;
};

Counterexample make_cex(const Graph& g, std::string details) {
    Counterexample c;
    c.graph = encode_graph6(g);
    c.details = std::move(details);
    c.sort_key = is_tree(g) ? "0" + canonical_code(g).code : "1" + c.graph;
    return c;
}

// Runs check(i) for i in [0, count) on `jobs` threads. Results are stored by
// index so the merge does not depend on scheduling.
std::vector<Finding> run_parallel(std::size_t count, int jobs,
                                  const std::function<Finding(std::size_t)>& check) {
    std::vector<Finding> out(count);
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = check(i);
        }
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) {
                    out[i] = check(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

std::vector<Graph> trees_between(int lo, int hi) {
    std::vector<Graph> out;
    for (int n = std::max(lo, 1); n <= hi; ++n) {
        for_each_tree(n, [&](const Graph& t) {
            out.push_back(t);
            return true;
        });
    }
    return out;
}

std::string join(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) {
            continue;
        }
        if (!out.empty()) {
            out += "; ";
        }
        out += p;
    }
    return out;
}

std::string trees_range(int lo, int hi, std::size_t count) {
    return "trees n=" + std::to_string(lo) + ".." + std::to_string(hi) + " (" +
           std::to_string(count) + ")";
}

std::string msd_text(const Graph& g, int k_max) {
    try {
        const auto r = msd_semitotal(g, k_max);
        return "msd=" + std::to_string(r.k);
    } catch (const MsdSearchExhausted&) {
        return "msd>" + std::to_string(k_max);
    }
}

// msd, or k_max + 1 when no k <= k_max increases the value.
int msd_or_over(const Graph& g, int k_max) {
    try {
        return msd_semitotal(g, k_max).k;
    } catch (const MsdSearchExhausted&) {
        return k_max + 1;
    }
}

int expected_path_cycle(int n) {
    switch (n % 5) {
        case 0:
        case 2: return 1;
        case 1:
        case 4: return 2;
        default: return 3;
    }
}

// Graph-level predicates shared by the tree claims.
bool adjacent_supports_with_degree_two(const Graph& t, const StructuralProfile& p) {
    for (const auto& e : t.edges()) {
        const bool su = std::binary_search(p.supports.begin(), p.supports.end(), e.u);
        const bool sv = std::binary_search(p.supports.begin(), p.supports.end(), e.v);
        if (su && sv && (t.degree(e.u) == 2 || t.degree(e.v) == 2)) {
            return true;
        }
    }
    return false;
}

bool distance_two_supports_with_degree_two(const Graph& t, const StructuralProfile& p) {
    const auto dist = distance_matrix(t);
    for (std::size_t i = 0; i < p.supports.size(); ++i) {
        for (std::size_t j = i + 1; j < p.supports.size(); ++j) {
            const Vertex u = p.supports[i];
            const Vertex v = p.supports[j];
            if (dist[u][v] == 2 && (t.degree(u) == 2 || t.degree(v) == 2)) {
                return true;
            }
        }
    }
    return false;
}

std::string set_text(const std::vector<Vertex>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

class Runner {
public:
    Runner(ClaimId claim, const VerifyBounds& bounds) : claim_(claim), bounds_(bounds) {
        max_n_ = bounds.max_n.value_or(default_max_order(claim));
        if (max_n_ > budget_max_order(claim)) {
            throw Error("bound " + std::to_string(max_n_) + " exceeds the budget of " +
                        std::string(to_string(claim)) + " (max " +
                        std::to_string(budget_max_order(claim)) + ")");
        }
        if (max_n_ < 1) {
            throw Error("order bound must be positive");
        }
        report_.claim = claim;
    }

    VerificationReport run() {
        const auto start = std::chrono::steady_clock::now();
        switch (claim_) {
            case ClaimId::CompleteAndWheel: complete_and_wheel(); break;
            case ClaimId::PathCycleTable: path_cycle(); break;
            case ClaimId::CompleteBipartiteTable: complete_bipartite(); break;
            case ClaimId::MsdAtMostThree: msd_at_most_three(); break;
            case ClaimId::UniversalVertexMsd: universal_vertex(); break;
            case ClaimId::CloseSupportsMsd: close_supports(); break;
            case ClaimId::FamilyUStructure: family_structure(FamilyId::U); break;
            case ClaimId::AlmostSemitotalSize: almost_semitotal(); break;
            case ClaimId::LeafFreeOptima: leaf_free(); break;
            case ClaimId::Class3Characterization: class3(); break;
            case ClaimId::DominationRatio: domination_ratio(); break;
            case ClaimId::TotalRatio: total_ratio(); break;
            case ClaimId::FamilyTStructure: family_structure(FamilyId::T); break;
            case ClaimId::FamilyTRatio: family_t_ratio(); break;
        }
        finish();
        report_.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        return std::move(report_);
    }

private:
    std::vector<Finding> run_all(const std::vector<Graph>& instances,
                                 const std::function<Finding(const Graph&)>& check) {
        report_.instances += static_cast<long>(instances.size());
        return run_parallel(instances.size(), bounds_.jobs,
                            [&](std::size_t i) { return check(instances[i]); });
    }

    void absorb(std::vector<Finding>& findings) {
        for (auto& f : findings) {
            for (auto& c : f.failures) {
                failures_.push_back(std::move(c));
            }
            for (const auto& [k, v] : f.counts) {
                counts_[k] += v;
            }
        }
    }

    void finish() {
        std::stable_sort(failures_.begin(), failures_.end(),
                         [](const Counterexample& a, const Counterexample& b) {
                             return a.sort_key < b.sort_key;
                         });
        report_.counterexamples_total = static_cast<long>(failures_.size());
        if (failures_.size() > kCounterexampleCap) {
            failures_.resize(kCounterexampleCap);
        }
        report_.counterexamples = std::move(failures_);
        report_.passed = report_.counterexamples.empty();
        for (const auto& [k, v] : counts_) {
            report_.stats.emplace_back(k, v);
        }
    }

    // General graphs from the external stream, filtered.
    std::vector<Graph> stream(const std::function<bool(const Graph&)>& keep) const {
        std::vector<Graph> out;
        for (const auto& g : bounds_.graphs) {
            if (keep(g)) {
                out.push_back(g);
            }
        }
        return out;
    }

    std::string stream_range(std::size_t used, std::string_view what) const {
        if (bounds_.graphs.empty()) {
            return "";
        }
        return "graph6 stream: " + std::to_string(used) + " of " +
               std::to_string(bounds_.graphs.size()) + " graphs (" + std::string(what) + ")";
    }

    void set_orders(int lo, int hi) {
        report_.min_order = lo;
        report_.max_order = hi;
    }

    void complete_and_wheel() {
        std::vector<Graph> graphs;
        for (int n = 3; n <= max_n_; ++n) {
            graphs.push_back(complete_graph(n));
            graphs.push_back(wheel_graph(n));
        }
        set_orders(3, max_n_);
        report_.range = "K_n and W_n for n=3.." + std::to_string(max_n_);
        auto f = run_all(graphs, [](const Graph& g) {
            Finding out;
            const int k = msd_or_over(g, 5);
            if (k != 3) {
                out.failures.push_back(make_cex(g, "expected msd=3, got " + msd_text(g, 5)));
            }
            return out;
        });
        absorb(f);
    }

    void path_cycle() {
        std::vector<Graph> graphs;
        for (int n = 3; n <= max_n_; ++n) {
            graphs.push_back(path_graph(n));
            graphs.push_back(cycle_graph(n));
        }
        set_orders(3, max_n_);
        report_.range = "P_n and C_n for n=3.." + std::to_string(max_n_);
        auto f = run_all(graphs, [](const Graph& g) {
            Finding out;
            // P_n has n-1 edges, C_n has n
            const int n = g.order();
            const int want = expected_path_cycle(n);
            const int k = msd_or_over(g, 5);
            if (k != want) {
                out.failures.push_back(make_cex(g, "expected msd=" + std::to_string(want) +
                                                       ", got " + msd_text(g, 5)));
            }
            return out;
        });
        absorb(f);
    }

    void complete_bipartite() {
        std::vector<Graph> graphs;
        for (int p = 1; p <= max_n_; ++p) {
            for (int q = p; q <= max_n_; ++q) {
                graphs.push_back(complete_bipartite_graph(p, q));
            }
        }
        set_orders(2, 2 * max_n_);
        report_.range = "K_{p,q} for 1<=p<=q<=" + std::to_string(max_n_);
        auto f = run_all(graphs, [](const Graph& g) {
            Finding out;
            // the p side is the smaller side; vertex 0 lies on it
            const int p = g.degree(g.order() - 1);
            const int q = g.order() - p;
            const int want = (p == 1 && q == 1) ? 4 : (p == 1 ? 3 : 2);
            const int k = msd_or_over(g, 5);
            if (k != want) {
                out.failures.push_back(make_cex(
                    g, "K_{" + std::to_string(p) + "," + std::to_string(q) + "}: expected msd=" +
                           std::to_string(want) + ", got " + msd_text(g, 5)));
            }
            return out;
        });
        absorb(f);
    }

    void msd_at_most_three() {
        const auto trees = trees_between(3, max_n_);
        const auto graphs =
            stream([](const Graph& g) { return g.order() >= 3 && is_connected(g); });
        set_orders(3, max_n_);
        report_.range = join({trees_range(3, max_n_, trees.size()),
                              stream_range(graphs.size(), "connected, order >= 3")});
        const auto check = [](const Graph& g) {
            Finding out;
            const int k = msd_or_over(g, 3);
            if (k > 3) {
                out.failures.push_back(make_cex(g, "no edge subdivision with k <= 3 raises gamma_t2"));
            }
            out.counts["msd" + std::to_string(k)] += 1;
            return out;
        };
        auto f = run_all(trees, check);
        absorb(f);
        auto h = run_all(graphs, check);
        absorb(h);
    }

    void universal_vertex() {
        const auto has_universal = [](const Graph& g) {
            return g.order() >= 3 && !structural_profile(g).universal.empty();
        };
        std::vector<Graph> trees;
        for (auto& t : trees_between(3, max_n_)) {
            if (has_universal(t)) {
                trees.push_back(std::move(t));
            }
        }
        const auto graphs = stream(has_universal);
        set_orders(3, max_n_);
        report_.range = join({"stars n=3.." + std::to_string(max_n_) + " (" +
                                  std::to_string(trees.size()) + ")",
                              stream_range(graphs.size(), "order >= 3 with a universal vertex")});
        const auto check = [](const Graph& g) {
            Finding out;
            const int k = msd_or_over(g, 5);
            if (k != 3) {
                out.failures.push_back(make_cex(g, "expected msd=3, got " + msd_text(g, 5)));
            }
            return out;
        };
        auto f = run_all(trees, check);
        absorb(f);
        auto h = run_all(graphs, check);
        absorb(h);
    }

    void close_supports() {
        std::vector<Graph> trees;
        for (auto& t : trees_between(3, max_n_)) {
            const auto p = structural_profile(t);
            if (adjacent_supports_with_degree_two(t, p) ||
                distance_two_supports_with_degree_two(t, p)) {
                trees.push_back(std::move(t));
            }
        }
        set_orders(3, max_n_);
        report_.range = "trees n=3.." + std::to_string(max_n_) +
                        " with two support vertices at distance 1 or 2, one of degree 2 (" +
                        std::to_string(trees.size()) + ")";
        auto f = run_all(trees, [](const Graph& t) {
            Finding out;
            const auto p = structural_profile(t);
            const int k = msd_or_over(t, 3);
            if (k > 2) {
                std::string which = adjacent_supports_with_degree_two(t, p) ? "adjacent" : "";
                if (distance_two_supports_with_degree_two(t, p)) {
                    which += which.empty() ? "distance-two" : "+distance-two";
                }
                out.failures.push_back(make_cex(t, which + " supports but msd=" + std::to_string(k)));
            }
            out.counts["msd" + std::to_string(k)] += 1;
            return out;
        });
        absorb(f);
    }

    std::vector<std::pair<Graph, const FamilyMember*>> members_of(const FamilyCatalog& cat) {
        std::vector<std::pair<Graph, const FamilyMember*>> out;
        for (const auto& [code, list] : cat.members) {
            for (const auto& m : list) {
                out.emplace_back(m.labeled.tree, &m);
            }
        }
        return out;
    }

    void check_members(const FamilyCatalog& cat, FamilyId as) {
        const auto members = members_of(cat);
        report_.instances += static_cast<long>(members.size());
        auto f = run_parallel(members.size(), bounds_.jobs, [&](std::size_t i) {
            Finding out;
            const auto& m = *members[i].second;
            for (const auto& v : validate_labeling(m.labeled, as)) {
                out.failures.push_back(make_cex(m.labeled.tree, std::string(to_string(as)) + " " +
                                                                    m.labeled.status_string() + ": " +
                                                                    v.clause + ": " + v.detail));
            }
            return out;
        });
        absorb(f);
        counts_[std::string("members_") + std::string(to_string(as))] +=
            static_cast<long>(members.size());
    }

    void family_structure(FamilyId family) {
        set_orders(1, max_n_);
        if (family == FamilyId::U) {
            const auto cat = generate_family(FamilyId::U, max_n_);
            report_.range = "family U members of order <= " + std::to_string(max_n_);
            check_members(cat, FamilyId::U);
            return;
        }
        const auto t = generate_family(FamilyId::T, max_n_);
        const auto t1 = generate_family(FamilyId::T1, max_n_);
        report_.range = "family T and T1 members of order <= " + std::to_string(max_n_);
        check_members(t, FamilyId::T);
        check_members(t1, FamilyId::T1);
    }

    void almost_semitotal() {
        const auto cat = generate_family(FamilyId::U, max_n_);
        const auto members = members_of(cat);
        set_orders(3, max_n_);
        report_.range = "family U members of order <= " + std::to_string(max_n_) +
                        ", every A vertex";
        report_.instances += static_cast<long>(members.size());
        auto f = run_parallel(members.size(), bounds_.jobs, [&](std::size_t i) {
            Finding out;
            const auto& m = *members[i].second;
            const Graph& t = m.labeled.tree;
            const int target = min_value(t, Variant::Semitotal) - 1;
            const auto a_vertices = m.labeled.with_status(Status::A);
            for (Vertex x : a_vertices) {
                out.counts["pairs"] += 1;
                const auto oracle = min_almost_semitotal(t, x);
                if (oracle.value != target) {
                    out.failures.push_back(make_cex(
                        t, m.labeled.status_string() + " x=" + std::to_string(x) +
                               ": minimum almost semitotal set has size " +
                               std::to_string(oracle.value) + ", expected " + std::to_string(target)));
                }
                const auto& rec = earliest_derivation(m, x);
                const auto built =
                    build_almost_semitotal_set(m.labeled, rec.derivation, x, rec.to_member);
                if (built.used_fallback) {
                    out.counts["fallbacks"] += 1;
                }
                const bool ok = static_cast<int>(built.set.size()) == target &&
                                is_almost_semitotal(t, built.set, x) &&
                                std::includes(built.set.begin(), built.set.end(),
                                              a_vertices.begin(), a_vertices.end());
                if (!ok) {
                    out.failures.push_back(make_cex(
                        t, m.labeled.status_string() + " x=" + std::to_string(x) +
                               ": constructed set " + set_text(built.set) +
                               " misses size, A-cover or almost semitotal condition"));
                }
            }
            out.counts["fallbacks"] += 0;  // always reported
            return out;
        });
        absorb(f);
    }

    void leaf_free() {
        const auto non_star = [](const Graph& g) {
            const auto p = structural_profile(g);
            return g.order() >= 2 && p.is_connected && !p.is_star;
        };
        std::vector<Graph> trees;
        for (auto& t : trees_between(2, max_n_)) {
            if (non_star(t)) {
                trees.push_back(std::move(t));
            }
        }
        const auto graphs = stream(non_star);
        set_orders(2, max_n_);
        report_.range = join({"non-star " + trees_range(2, max_n_, trees.size()),
                              stream_range(graphs.size(), "connected non-star")});
        const auto check = [](const Graph& g) {
            Finding out;
            const auto p = structural_profile(g);
            SearchConstraints c;
            c.allowed.emplace();
            for (Vertex v = 0; v < g.order(); ++v) {
                if (g.degree(v) != 1) {
                    c.allowed->push_back(v);
                }
            }
            for (Variant var : {Variant::Plain, Variant::Semitotal}) {
                const int free_value = min_value(g, var);
                const auto restricted = min_set_constrained(g, var, c);
                if (!restricted || restricted->value != free_value) {
                    out.failures.push_back(make_cex(
                        g, std::string("no leaf-free optimal ") + std::string(to_string(var)) +
                               " set (optimum " + std::to_string(free_value) + ")"));
                }
            }
            return out;
        };
        auto f = run_all(trees, check);
        absorb(f);
        auto h = run_all(graphs, check);
        absorb(h);
    }

    // Set-equality claim over trees: `lhs` and `rhs` are evaluated per tree.
    void set_equality(const std::vector<Graph>& trees, std::string lhs_name, std::string rhs_name,
                      const std::function<bool(const Graph&)>& lhs,
                      const std::function<bool(const Graph&)>& rhs) {
        auto f = run_all(trees, [&](const Graph& t) {
            Finding out;
            const bool a = lhs(t);
            const bool b = rhs(t);
            if (a != b) {
                out.failures.push_back(make_cex(t, a ? lhs_name + " but not " + rhs_name
                                                     : rhs_name + " but not " + lhs_name));
            }
            out.counts["equality_set"] += a && b;
            return out;
        });
        absorb(f);
    }

    void class3() {
        const auto cat = generate_family(FamilyId::U, max_n_);
        const auto trees = trees_between(3, max_n_);
        set_orders(3, max_n_);
        report_.range = trees_range(3, max_n_, trees.size());
        set_equality(
            trees, "class 3", "in family U",
            [](const Graph& t) { return classify_tree(t) == TreeClass::Class3; },
            [&](const Graph& t) { return recognize(cat, t).has_value(); });

        // No non-star tree of diameter <= 6 is in class 3.
        std::vector<Graph> shallow;
        for (const auto& t : trees) {
            const auto p = structural_profile(t);
            if (!p.is_star && p.diameter && *p.diameter <= 6) {
                shallow.push_back(t);
            }
        }
        auto f = run_all(shallow, [](const Graph& t) {
            Finding out;
            const int k = msd_or_over(t, 3);
            if (k > 2) {
                out.failures.push_back(make_cex(t, "non-star tree with diameter <= 6 has msd=" +
                                                       std::to_string(k)));
            }
            return out;
        });
        report_.instances -= static_cast<long>(shallow.size());
        counts_["shallow_non_star"] += static_cast<long>(shallow.size());
        absorb(f);
    }

    void domination_ratio() {
        const auto cat = generate_family(FamilyId::T, max_n_);
        std::vector<Graph> trees;
        for (auto& t : trees_between(2, max_n_)) {
            if (!structural_profile(t).is_star) {
                trees.push_back(std::move(t));
            }
        }
        set_orders(2, max_n_);
        report_.range = "non-star " + trees_range(2, max_n_, trees.size());
        auto f = run_all(trees, [&](const Graph& t) {
            Finding out;
            const int g = min_value(t, Variant::Plain);
            const int g2 = min_value(t, Variant::Semitotal);
            if (g2 > 2 * g - 1) {
                out.failures.push_back(make_cex(t, "gamma_t2=" + std::to_string(g2) +
                                                       " > 2*gamma-1 with gamma=" + std::to_string(g)));
            }
            const bool equal = g2 == 2 * g - 1;
            const bool member = recognize(cat, t).has_value();
            if (equal != member) {
                out.failures.push_back(make_cex(t, equal ? "gamma_t2 = 2gamma-1 but not in family T"
                                                         : "in family T but gamma_t2 != 2gamma-1"));
            }
            out.counts["equality_set"] += equal && member;
            return out;
        });
        absorb(f);
    }

    void total_ratio() {
        const auto cat = generate_family(FamilyId::T1, max_n_);
        const auto trees = trees_between(2, max_n_);
        set_orders(2, max_n_);
        report_.range = trees_range(2, max_n_, trees.size());
        auto f = run_all(trees, [&](const Graph& t) {
            Finding out;
            const int g2 = min_value(t, Variant::Semitotal);
            const int gt = min_value(t, Variant::Total);
            if (gt > 2 * g2 - 1) {
                out.failures.push_back(make_cex(t, "gamma_t=" + std::to_string(gt) +
                                                       " > 2*gamma_t2-1 with gamma_t2=" +
                                                       std::to_string(g2)));
            }
            const bool equal = gt == 2 * g2 - 1;
            const bool member = recognize(cat, t).has_value();
            if (equal != member) {
                out.failures.push_back(make_cex(t, equal
                                                       ? "gamma_t = 2gamma_t2-1 but not in family T1"
                                                       : "in family T1 but gamma_t != 2gamma_t2-1"));
            }
            out.counts["equality_set"] += equal && member;
            return out;
        });
        absorb(f);
    }

    void family_t_ratio() {
        const auto cat = generate_family(FamilyId::T, max_n_);
        const auto members = members_of(cat);
        set_orders(6, max_n_);
        report_.range = "family T members of order <= " + std::to_string(max_n_);
        report_.instances += static_cast<long>(members.size());
        auto f = run_parallel(members.size(), bounds_.jobs, [&](std::size_t i) {
            Finding out;
            const Graph& t = members[i].first;
            const int g = min_value(t, Variant::Plain);
            const int g2 = min_value(t, Variant::Semitotal);
            if (g2 != 2 * g - 1) {
                out.failures.push_back(make_cex(t, "gamma=" + std::to_string(g) + " gamma_t2=" +
                                                       std::to_string(g2)));
            }
            return out;
        });
        absorb(f);
    }

    ClaimId claim_;
    const VerifyBounds& bounds_;
    int max_n_ = 0;
    VerificationReport report_;
    std::vector<Counterexample> failures_;
    std::map<std::string, long> counts_;
};

}  // namespace

VerificationReport run_verification(ClaimId claim, const VerifyBounds& bounds) {
    return Runner(claim, bounds).run();
}

}  // namespace semidom
