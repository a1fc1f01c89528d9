#include "semidom/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "semidom/solvers.hpp"

namespace semidom {

std::string_view to_string(FamilyId f) {
    switch (f) {
        case FamilyId::U: return "U";
        case FamilyId::T: return "T";
        case FamilyId::T1: return "T1";
    }
    return "?";
}

std::string_view to_string(Operation op) {
    switch (op) {
        case Operation::P1: return "P1";
        case Operation::P2: return "P2";
        case Operation::P3: return "P3";
        case Operation::O1: return "O1";
        case Operation::O2: return "O2";
        case Operation::O3: return "O3";
    }
    return "?";
}

std::optional<FamilyId> parse_family(std::string_view text) {
    for (FamilyId f : {FamilyId::U, FamilyId::T, FamilyId::T1}) {
        if (text == to_string(f)) {
            return f;
        }
    }
    return std::nullopt;
}

std::optional<Operation> parse_operation(std::string_view text) {
    for (Operation op : {Operation::P1, Operation::P2, Operation::P3, Operation::O1,
                         Operation::O2, Operation::O3}) {
        if (text == to_string(op)) {
            return op;
        }
    }
    return std::nullopt;
}

std::string LabeledTree::status_string() const {
    std::string out;
    out.reserve(status.size());
    for (Status s : status) {
        out.push_back(static_cast<char>(s));
    }
    return out;
}

std::vector<Vertex> LabeledTree::with_status(Status s) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(status.size()); ++v) {
        if (status[v] == s) {
            out.push_back(v);
        }
    }
    return out;
}

namespace {

Status status_from_char(char c) {
    if (c < 'A' || c > 'E') {
        throw Error(std::string("unknown status letter '") + c + "'");
    }
    return static_cast<Status>(c);
}

}  // namespace

LabeledTree make_labeled(Graph tree, std::string_view statuses) {
    if (!is_tree(tree)) {
        throw Error("labeled tree needs a tree");
    }
    if (static_cast<int>(statuses.size()) != tree.order()) {
        throw Error("status string length does not match tree order");
    }
    LabeledTree lt{std::move(tree), {}};
    for (char c : statuses) {
        lt.status.push_back(status_from_char(c));
    }
    return lt;
}

std::string Derivation::to_string() const {
    if (steps.empty()) {
        return "-";
    }
    std::string out;
    for (const auto& s : steps) {
        if (!out.empty()) {
            out.push_back(';');
        }
        out += semidom::to_string(s.op);
        out.push_back('@');
        out += std::to_string(s.attach);
    }
    return out;
}

Derivation parse_derivation(FamilyId family, std::string_view text) {
    Derivation d{family, {}};
    if (text == "-") {
        return d;
    }
    while (!text.empty()) {
        const auto semi = text.find(';');
        const auto item = text.substr(0, semi);
        const auto at = item.find('@');
        if (at == std::string_view::npos) {
            throw Error("malformed derivation step '" + std::string(item) + "'");
        }
        const auto op = parse_operation(item.substr(0, at));
        Vertex v = -1;
        const auto num = item.substr(at + 1);
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
        if (!op || ec != std::errc{} || ptr != num.data() + num.size()) {
            throw Error("malformed derivation step '" + std::string(item) + "'");
        }
        d.steps.push_back({*op, v});
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    }
    return d;
}

namespace {

// Gadget added by an operation: a path v1..vk hung from the attach vertex.
struct Gadget {
    std::string_view labels;
};

Gadget gadget(Operation op) {
    switch (op) {
        case Operation::P1: return {"C"};
        case Operation::P2: return {"BCAC"};
        case Operation::P3: return {"BBCAC"};
        case Operation::O1: return {"C"};
        case Operation::O2: return {"DEBC"};
        case Operation::O3: return {"DBC"};
    }
    return {""};
}

constexpr std::array kUOps{Operation::P1, Operation::P2, Operation::P3};
constexpr std::array kTOps{Operation::O1, Operation::O2};
constexpr std::array kT1Ops{Operation::O1, Operation::O3};

LabeledTree labeled_path(std::string_view statuses) {
    return make_labeled(path_graph(static_cast<int>(statuses.size())), statuses);
}

}  // namespace

LabeledTree seed(FamilyId family) {
    switch (family) {
        case FamilyId::U: return labeled_path("CAC");
        case FamilyId::T: return labeled_path("CADEBC");
        case FamilyId::T1: return labeled_path("CBDAC");
    }
    throw Error("unknown family");
}

std::span<const Operation> family_operations(FamilyId family) {
    switch (family) {
        case FamilyId::U: return kUOps;
        case FamilyId::T: return kTOps;
        case FamilyId::T1: return kT1Ops;
    }
    return {};
}

bool accepts(Operation op, Status s) {
    switch (op) {
        case Operation::P1: return s == Status::A;
        case Operation::P2: return s == Status::B;
        case Operation::P3: return s == Status::C;
        case Operation::O1: return s == Status::A || s == Status::B;
        case Operation::O2:
        case Operation::O3: return s == Status::A;
    }
    return false;
}

LabeledTree apply_operation(const LabeledTree& lt, Operation op, Vertex v) {
    if (!lt.tree.contains(v)) {
        throw Error("attach vertex " + std::to_string(v) + " is out of range");
    }
    if (!accepts(op, lt.status[v])) {
        throw Error(std::string(to_string(op)) + " cannot attach at vertex " + std::to_string(v) +
                    " with status " + static_cast<char>(lt.status[v]));
    }
    const auto labels = gadget(op).labels;
    const int n = lt.tree.order();
    auto edges = lt.tree.edge_pairs();
    Vertex prev = v;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        edges.emplace_back(prev, n + i);
        prev = n + i;
    }
    LabeledTree out{Graph(n + static_cast<int>(labels.size()), edges), lt.status};
    for (char c : labels) {
        out.status.push_back(static_cast<Status>(c));
    }
    return out;
}

LabeledTree replay(const Derivation& d) {
    const auto ops = family_operations(d.family);
    LabeledTree lt = seed(d.family);
    for (const auto& step : d.steps) {
        if (std::find(ops.begin(), ops.end(), step.op) == ops.end()) {
            throw Error(std::string(to_string(step.op)) + " is not an operation of family " +
                        std::string(to_string(d.family)));
        }
        lt = apply_operation(lt, step.op, step.attach);
    }
    return lt;
}

std::size_t FamilyCatalog::member_count() const {
    std::size_t total = 0;
    for (const auto& [code, list] : members) {
        total += list.size();
    }
    return total;
}

const std::vector<FamilyMember>* FamilyCatalog::find(const CanonicalCode& code) const {
    const auto it = members.find(code);
    return it == members.end() ? nullptr : &it->second;
}

namespace {

std::vector<char> label_chars(const LabeledTree& lt) {
    std::vector<char> out;
    out.reserve(lt.status.size());
    for (Status s : lt.status) {
        out.push_back(static_cast<char>(s));
    }
    return out;
}

struct Building {
    FamilyMember member;
    CanonicalCode code;
    std::vector<Vertex> canon_order;  // of the labeled form
};

// Inverse permutation.
std::vector<Vertex> invert(std::span<const Vertex> perm) {
    std::vector<Vertex> inv(perm.size());
    for (Vertex i = 0; i < static_cast<Vertex>(perm.size()); ++i) {
        inv[perm[i]] = i;
    }
    return inv;
}

bool keep_record(FamilyMember& m, DerivationRecord rec) {
    bool improves = false;
    for (std::size_t u = 0; u < rec.intro.size(); ++u) {
        if (rec.intro[u] < m.earliest_intro[u]) {
            improves = true;
        }
    }
    if (!improves && m.derivations.size() >= kDerivationCap) {
        return false;
    }
    for (std::size_t u = 0; u < rec.intro.size(); ++u) {
        m.earliest_intro[u] = std::min(m.earliest_intro[u], rec.intro[u]);
    }
    m.derivations.push_back(std::move(rec));
    return true;
}

}  // namespace

FamilyCatalog generate_family(FamilyId family, int n_max) {
    const LabeledTree start = seed(family);
    if (n_max < start.tree.order()) {
        FamilyCatalog empty;
        empty.family = family;
        empty.bound = n_max;
        return empty;
    }
    std::vector<Building> all;
    std::unordered_map<std::string, std::size_t> by_labeled_code;
    std::vector<std::vector<std::size_t>> by_order(static_cast<std::size_t>(n_max) + 1);

    {
        const int n = start.tree.order();
        auto form = canonical_form(start.tree, label_chars(start));
        Building b;
        b.member.labeled = start;
        b.member.labeled_code = form.code;
        b.member.earliest_intro.assign(static_cast<std::size_t>(n), 0);
        DerivationRecord rec{Derivation{family, {}}, std::vector<Vertex>(n), std::vector<int>(n, 0)};
        std::iota(rec.to_member.begin(), rec.to_member.end(), 0);
        b.member.derivations.push_back(std::move(rec));
        b.code = canonical_code(start.tree);
        b.canon_order = std::move(form.order);
        by_labeled_code.emplace(b.member.labeled_code.code, 0);
        by_order[n].push_back(0);
        all.push_back(std::move(b));
    }

    // Parents always have smaller order than children, so expanding by order
    // sees every derivation of a member before the member is expanded.
    for (int order = start.tree.order(); order <= n_max; ++order) {
        for (std::size_t idx : by_order[order]) {
            const FamilyMember parent = all[idx].member;
            const int np = parent.labeled.tree.order();
            for (Operation op : family_operations(family)) {
                const int grown = np + static_cast<int>(gadget(op).labels.size());
                if (grown > n_max) {
                    continue;
                }
                for (Vertex v = 0; v < np; ++v) {
                    if (!accepts(op, parent.labeled.status[v])) {
                        continue;
                    }
                    LabeledTree child = apply_operation(parent.labeled, op, v);
                    auto form = canonical_form(child.tree, label_chars(child));

                    // iso: child vertex (parent-member numbering) -> stored member vertex
                    std::vector<Vertex> iso(static_cast<std::size_t>(grown));
                    std::size_t target;
                    const auto found = by_labeled_code.find(form.code.code);
                    if (found == by_labeled_code.end()) {
                        target = all.size();
                        Building b;
                        b.member.labeled = child;
                        b.member.labeled_code = form.code;
                        b.member.earliest_intro.assign(static_cast<std::size_t>(grown),
                                                       std::numeric_limits<int>::max());
                        b.code = canonical_code(child.tree);
                        b.canon_order = form.order;
                        by_labeled_code.emplace(form.code.code, target);
                        by_order[grown].push_back(target);
                        all.push_back(std::move(b));
                        std::iota(iso.begin(), iso.end(), 0);
                    } else {
                        target = found->second;
                        const auto& order_b = all[target].canon_order;
                        for (std::size_t i = 0; i < form.order.size(); ++i) {
                            iso[form.order[i]] = order_b[i];
                        }
                    }

                    for (const auto& pr : parent.derivations) {
                        const auto from_member = invert(pr.to_member);
                        DerivationRecord rec;
                        rec.derivation = pr.derivation;
                        rec.derivation.steps.push_back({op, from_member[v]});
                        const int step_index = static_cast<int>(rec.derivation.steps.size());
                        rec.to_member.resize(static_cast<std::size_t>(grown));
                        rec.intro.resize(static_cast<std::size_t>(grown));
                        for (Vertex r = 0; r < grown; ++r) {
                            const Vertex in_child = r < np ? pr.to_member[r] : r;
                            rec.to_member[r] = iso[in_child];
                        }
                        for (Vertex u = 0; u < grown; ++u) {
                            rec.intro[iso[u]] = u < np ? pr.intro[u] : step_index;
                        }
                        keep_record(all[target].member, std::move(rec));
                    }
                }
            }
        }
    }

    FamilyCatalog catalog;
    catalog.family = family;
    catalog.bound = n_max;
    for (auto& b : all) {
        catalog.members[b.code].push_back(std::move(b.member));
    }
    return catalog;
}

std::optional<Recognition> recognize(const FamilyCatalog& catalog, const Graph& t) {
    if (!is_tree(t)) {
        throw Error("recognize needs a tree");
    }
    if (t.order() > catalog.bound) {
        throw Error("tree order " + std::to_string(t.order()) + " exceeds catalog bound " +
                    std::to_string(catalog.bound));
    }
    const auto* list = catalog.find(canonical_code(t));
    if (list == nullptr || list->empty()) {
        return std::nullopt;
    }
    const FamilyMember& m = list->front();
    const auto iso = tree_isomorphism(m.labeled.tree, t);
    if (!iso) {
        throw Error("catalog code collision");
    }
    Recognition out;
    out.labeled.tree = t;
    out.labeled.status.assign(static_cast<std::size_t>(t.order()), Status::A);
    for (Vertex u = 0; u < t.order(); ++u) {
        out.labeled.status[(*iso)[u]] = m.labeled.status[u];
    }
    const auto& rec = m.derivations.front();
    out.derivation = rec.derivation;
    out.to_input.resize(rec.to_member.size());
    for (std::size_t r = 0; r < rec.to_member.size(); ++r) {
        out.to_input[r] = (*iso)[rec.to_member[r]];
    }
    return out;
}

std::optional<Recognition> recognize(FamilyId family, const Graph& t, int n_cap) {
    if (!is_tree(t)) {
        throw Error("recognize needs a tree");
    }
    if (t.order() > n_cap) {
        throw Error("tree order " + std::to_string(t.order()) + " exceeds cap " +
                    std::to_string(n_cap));
    }
    const int seed_order = seed(family).tree.order();
    if (t.order() < seed_order) {
        return std::nullopt;
    }
    return recognize(generate_family(family, t.order()), t);
}

namespace {

class Checker {
public:
    Checker(const LabeledTree& lt, std::vector<Violation>& out) : lt_(lt), out_(out) {}

    void fail(std::string clause, std::string detail) {
        out_.push_back({std::move(clause), std::move(detail)});
    }

    Status sta(Vertex v) const { return lt_.status[v]; }
    int deg(Vertex v) const { return lt_.tree.degree(v); }
    bool leaf(Vertex v) const { return deg(v) == 1; }

    std::string at(Vertex v) const {
        return "vertex " + std::to_string(v) + " (" + static_cast<char>(sta(v)) + ")";
    }

    int count_neighbors(Vertex v, Status s) const {
        int c = 0;
        for (Vertex u : lt_.tree.neighbors(v)) {
            c += sta(u) == s ? 1 : 0;
        }
        return c;
    }

    bool is_support(Vertex v) const {
        const auto nb = lt_.tree.neighbors(v);
        return std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return leaf(u); });
    }

    std::vector<Vertex> union_of(std::initializer_list<Status> ss) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < lt_.tree.order(); ++v) {
            if (std::find(ss.begin(), ss.end(), sta(v)) != ss.end()) {
                out.push_back(v);
            }
        }
        return out;
    }

    const LabeledTree& lt_;
    std::vector<Violation>& out_;
};

void check_u(Checker& c) {
    const Graph& t = c.lt_.tree;
    for (Vertex v = 0; v < t.order(); ++v) {
        if (c.is_support(v)) {
            if (c.sta(v) != Status::A) {
                c.fail("support_status", c.at(v) + " is a support vertex not labeled A");
            } else if (c.count_neighbors(v, Status::C) != c.deg(v)) {
                c.fail("support_status", c.at(v) + " has a neighbor not labeled C");
            }
        }
        if (c.leaf(v) && c.sta(v) != Status::C) {
            c.fail("leaf_status", c.at(v) + " is a leaf not labeled C");
        }
        if (c.sta(v) == Status::C && !c.leaf(v)) {
            if (c.count_neighbors(v, Status::A) != 1 ||
                c.count_neighbors(v, Status::B) != c.deg(v) - 1) {
                c.fail("c_neighborhood", c.at(v) + " needs one A neighbor and otherwise B");
            }
        }
        if (c.sta(v) == Status::B) {
            if (c.count_neighbors(v, Status::C) != 1 ||
                c.count_neighbors(v, Status::B) != c.deg(v) - 1) {
                c.fail("b_neighborhood", c.at(v) + " needs one C neighbor and otherwise B");
            }
        }
    }
    for (const auto& e : t.edges()) {
        const Status a = c.sta(e.u);
        const Status b = c.sta(e.v);
        if (a == b && (a == Status::A || a == Status::C)) {
            c.fail("independence", "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                       ") joins two " + static_cast<char>(a) + " vertices");
        }
    }
}

// Shared by T and T1: supports are exactly A/B, leaves exactly C, and the
// non-leaf neighbors of A and B carry the given statuses.
void check_support_leaf(Checker& c, Status a_next, Status b_next) {
    const Graph& t = c.lt_.tree;
    for (Vertex v = 0; v < t.order(); ++v) {
        const bool ab = c.sta(v) == Status::A || c.sta(v) == Status::B;
        if (ab != c.is_support(v)) {
            c.fail("support_iff_ab", c.at(v) + (ab ? " is labeled A/B but is not a support vertex"
                                                    : " is a support vertex not labeled A/B"));
        }
        if ((c.sta(v) == Status::C) != c.leaf(v)) {
            c.fail("leaf_iff_c", c.at(v) + (c.leaf(v) ? " is a leaf not labeled C"
                                                      : " is labeled C but is not a leaf"));
        }
        if (ab) {
            const Status want = c.sta(v) == Status::A ? a_next : b_next;
            for (Vertex u : t.neighbors(v)) {
                if (!c.leaf(u) && c.sta(u) != want) {
                    c.fail("ab_neighbors", c.at(v) + " has non-leaf neighbor " +
                                               std::to_string(u) + " not labeled " +
                                               static_cast<char>(want));
                }
            }
        }
    }
}

bool neighbor_statuses_are(const Checker& c, Vertex v, Status x, Status y) {
    const auto nb = c.lt_.tree.neighbors(v);
    if (nb.size() != 2) {
        return false;
    }
    const Status p = c.sta(nb[0]);
    const Status q = c.sta(nb[1]);
    return (p == x && q == y) || (p == y && q == x);
}

void check_t(Checker& c) {
    const auto& lt = c.lt_;
    check_support_leaf(c, Status::D, Status::E);

    const auto na = lt.with_status(Status::A).size();
    const auto nb = lt.with_status(Status::B).size();
    const auto nd = lt.with_status(Status::D).size();
    const auto ne = lt.with_status(Status::E).size();
    if (na != 1 || nb != nd || nb != ne) {
        c.fail("class_sizes", "|A|=" + std::to_string(na) + " |B|=" + std::to_string(nb) +
                                  " |D|=" + std::to_string(nd) + " |E|=" + std::to_string(ne));
    }

    const auto ab = c.union_of({Status::A, Status::B});
    const auto gamma_sets = all_min_sets(lt.tree, Variant::Plain);
    if (gamma_sets.size() != 1 || gamma_sets.front() != ab) {
        c.fail("unique_gamma_set", "A and B vertices are not the unique minimum dominating set (" +
                                       std::to_string(gamma_sets.size()) + " optimal sets)");
    }

    const auto abd = c.union_of({Status::A, Status::B, Status::D});
    if (!check_set(lt.tree, abd, Variant::Semitotal) ||
        static_cast<int>(abd.size()) != min_value(lt.tree, Variant::Semitotal)) {
        c.fail("semitotal_set", "A, B and D vertices are not a minimum semitotal dominating set");
    }

    for (Vertex v = 0; v < lt.tree.order(); ++v) {
        if (c.sta(v) == Status::D && !neighbor_statuses_are(c, v, Status::A, Status::E)) {
            c.fail("de_shape", c.at(v) + " must have exactly the neighbors A and E");
        }
        if (c.sta(v) == Status::E && !neighbor_statuses_are(c, v, Status::B, Status::D)) {
            c.fail("de_shape", c.at(v) + " must have exactly the neighbors B and D");
        }
    }
}

void check_t1(Checker& c) {
    const auto& lt = c.lt_;
    check_support_leaf(c, Status::D, Status::D);

    const auto na = lt.with_status(Status::A).size();
    const auto nb = lt.with_status(Status::B).size();
    const auto nd = lt.with_status(Status::D).size();
    const auto ne = lt.with_status(Status::E).size();
    if (na != 1 || nb != nd || ne != 0) {
        c.fail("class_sizes", "|A|=" + std::to_string(na) + " |B|=" + std::to_string(nb) +
                                  " |D|=" + std::to_string(nd) + " |E|=" + std::to_string(ne));
    }

    const auto ab = c.union_of({Status::A, Status::B});
    if (!check_set(lt.tree, ab, Variant::Semitotal) ||
        static_cast<int>(ab.size()) != min_value(lt.tree, Variant::Semitotal)) {
        c.fail("semitotal_set", "A and B vertices are not a minimum semitotal dominating set");
    }
    const auto abd = c.union_of({Status::A, Status::B, Status::D});
    if (!check_set(lt.tree, abd, Variant::Total) ||
        static_cast<int>(abd.size()) != min_value(lt.tree, Variant::Total)) {
        c.fail("total_set", "A, B and D vertices are not a minimum total dominating set");
    }

    for (Vertex v = 0; v < lt.tree.order(); ++v) {
        if (c.sta(v) == Status::D && !neighbor_statuses_are(c, v, Status::A, Status::B)) {
            c.fail("d_shape", c.at(v) + " must have exactly the neighbors A and B");
        }
    }
}

}  // namespace

std::vector<Violation> validate_labeling(const LabeledTree& lt, FamilyId family) {
    if (static_cast<int>(lt.status.size()) != lt.tree.order()) {
        throw Error("status count does not match tree order");
    }
    const char top = family == FamilyId::U ? 'C' : 'E';
    for (Status s : lt.status) {
        const char ch = static_cast<char>(s);
        if (ch < 'A' || ch > top) {
            throw Error(std::string("status ") + ch + " is outside the alphabet of family " +
                        std::string(to_string(family)));
        }
    }
    std::vector<Violation> out;
    Checker c(lt, out);
    switch (family) {
        case FamilyId::U: check_u(c); break;
        case FamilyId::T: check_t(c); break;
        case FamilyId::T1: check_t1(c); break;
    }
    return out;
}

const DerivationRecord& earliest_derivation(const FamilyMember& member, Vertex x) {
    if (member.derivations.empty()) {
        throw Error("member has no stored derivation");
    }
    const DerivationRecord* best = &member.derivations.front();
    for (const auto& rec : member.derivations) {
        if (rec.intro.at(x) < best->intro.at(x)) {
            best = &rec;
        }
    }
    return *best;
}

std::vector<Vertex> almost_semitotal_by_derivation(const Derivation& d, Vertex x_replay) {
    if (d.family != FamilyId::U) {
        throw Error("almost semitotal construction applies to family U");
    }
    const LabeledTree seed_tree = seed(FamilyId::U);

    // First vertex id added by each step; step j owns ids [first[j], first[j+1]).
    std::vector<int> first{0};
    int n = seed_tree.tree.order();
    first.push_back(n);
    for (const auto& s : d.steps) {
        n += static_cast<int>(gadget(s.op).labels.size());
        first.push_back(n);
    }
    if (x_replay < 0 || x_replay >= n) {
        throw Error("vertex is out of range");
    }
    // Step that introduced x (0 for the seed).
    int intro = 0;
    while (x_replay >= first[static_cast<std::size_t>(intro) + 1]) {
        ++intro;
    }
    const LabeledTree full = replay(d);
    if (full.status[x_replay] != Status::A) {
        throw Error("vertex " + std::to_string(x_replay) + " is not labeled A");
    }

    // Offsets of the gadget vertices used below, in path order v1..vk:
    // P2 = B C A C (A at 2, distance 2 from it: v1 at 0);
    // P3 = B B C A C (A at 3, distance 2: v2 at 1, distance 3: v1 at 0).
    std::vector<Vertex> set{seed_tree.with_status(Status::A).front()};
    std::vector<Vertex> pending;
    const int k = static_cast<int>(d.steps.size());
    for (int j = 1; j <= k; ++j) {
        const Operation op = d.steps[static_cast<std::size_t>(j) - 1].op;
        const Vertex base = first[static_cast<std::size_t>(j)];
        if (j <= intro) {
            if (op == Operation::P2) {
                set.insert(set.end(), pending.begin(), pending.end());
                set.push_back(base + 2);
                pending.assign(1, base + 0);
            } else if (op == Operation::P3) {
                set.push_back(base + 3);
                set.push_back(base + 0);
                pending.assign(1, base + 1);
            }
        } else {
            if (op == Operation::P2) {
                set.push_back(base + 2);
                set.push_back(base + 0);
            } else if (op == Operation::P3) {
                set.push_back(base + 3);
                set.push_back(base + 1);
            }
        }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

AlmostSetOutcome build_almost_semitotal_set(const LabeledTree& lt, const Derivation& d, Vertex x,
                                            std::span<const Vertex> to_member) {
    if (!lt.tree.contains(x) || lt.status[x] != Status::A) {
        throw Error("vertex " + std::to_string(x) + " is not labeled A");
    }
    std::vector<Vertex> map(to_member.begin(), to_member.end());
    if (map.empty()) {
        if (replay(d) != lt) {
            throw Error("derivation does not replay to the labeled tree");
        }
        map.resize(static_cast<std::size_t>(lt.tree.order()));
        std::iota(map.begin(), map.end(), 0);
    }
    if (static_cast<int>(map.size()) != lt.tree.order()) {
        throw Error("vertex map size does not match tree order");
    }
    const auto from_member = invert(map);

    AlmostSetOutcome out;
    for (Vertex r : almost_semitotal_by_derivation(d, from_member[x])) {
        out.set.push_back(map[r]);
    }
    std::sort(out.set.begin(), out.set.end());

    const auto a_vertices = lt.with_status(Status::A);
    const bool has_a = std::includes(out.set.begin(), out.set.end(), a_vertices.begin(),
                                     a_vertices.end());
    const int target = min_value(lt.tree, Variant::Semitotal) - 1;
    if (has_a && static_cast<int>(out.set.size()) == target &&
        is_almost_semitotal(lt.tree, out.set, x)) {
        return out;
    }

    SearchConstraints c;
    c.forced = a_vertices;
    c.exempt = x;
    auto fallback = min_set_constrained(lt.tree, Variant::Semitotal, c);
    if (!fallback) {
        throw Error("no almost semitotal dominating set contains every A vertex");
    }
    out.set = std::move(fallback->witness);
    out.used_fallback = true;
    return out;
}

}  // namespace semidom
