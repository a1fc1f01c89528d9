#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semidom/graph.hpp"
#include "semidom/trees.hpp"

namespace semidom {

enum class Status : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E' };

/// U characterizes trees whose multisubdivision number is 3, T the trees
/// with gamma_t2 = 2 gamma - 1, and T1 the trees with gamma_t = 2 gamma_t2 - 1.
enum class FamilyId { U, T, T1 };

/// Attachment operations. P1-P3 generate U; O1 with O2 generates T; O1 with
/// O3 generates T1.
enum class Operation { P1, P2, P3, O1, O2, O3 };

std::string_view to_string(FamilyId f);
std::string_view to_string(Operation op);
std::optional<FamilyId> parse_family(std::string_view text);
std::optional<Operation> parse_operation(std::string_view text);

struct LabeledTree {
    Graph tree;
    std::vector<Status> status;

    /// One status letter per vertex in id order, e.g. "CAC".
    std::string status_string() const;
    std::vector<Vertex> with_status(Status s) const;

    friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

/// Builds a labeled tree from a status string; throws on bad letters, a
/// length mismatch, or a non-tree.
LabeledTree make_labeled(Graph tree, std::string_view statuses);

struct Step {
    Operation op = Operation::P1;
    Vertex attach = 0;  // id in the tree the step is applied to

    friend bool operator==(const Step&, const Step&) = default;
};

/// Construction sequence from the family seed. New vertices of each step get
/// the next free ids in attachment-path order.
struct Derivation {
    FamilyId family = FamilyId::U;
    std::vector<Step> steps;

    /// "P3@2;P1@1", or "-" for the bare seed.
    std::string to_string() const;

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

Derivation parse_derivation(FamilyId family, std::string_view text);

LabeledTree seed(FamilyId family);
std::span<const Operation> family_operations(FamilyId family);

/// Status the attach vertex must carry for `op` to apply.
bool accepts(Operation op, Status s);

/// Attaches the operation's gadget at `v`. Throws Error when v's status does
/// not satisfy the operation.
LabeledTree apply_operation(const LabeledTree& lt, Operation op, Vertex v);

/// Replays a derivation from the family seed. Throws Error on an illegal step
/// or an operation outside the family.
LabeledTree replay(const Derivation& d);

/// A derivation of a catalog member plus how its replay lines up with the
/// stored member: replay vertex r is member vertex to_member[r], and member
/// vertex u first appears at step intro[u] (0 for seed vertices).
struct DerivationRecord {
    Derivation derivation;
    std::vector<Vertex> to_member;
    std::vector<int> intro;
};

struct FamilyMember {
    LabeledTree labeled;
    CanonicalCode labeled_code;
    std::vector<DerivationRecord> derivations;
    /// Per member vertex, the smallest intro step over all known derivations.
    std::vector<int> earliest_intro;
};

inline constexpr std::size_t kDerivationCap = 32;

struct FamilyCatalog {
    FamilyId family = FamilyId::U;
    int bound = 0;
    /// Keyed by the unlabeled tree code; one entry per distinct labeling.
    std::map<CanonicalCode, std::vector<FamilyMember>> members;

    std::size_t member_count() const;
    const std::vector<FamilyMember>* find(const CanonicalCode& code) const;
};

/// Closure of the seed under the family's operations, restricted to order
/// <= n_max. Labeled trees are deduplicated up to label-preserving
/// isomorphism. Each member keeps up to kDerivationCap derivations, plus any
/// derivation that introduces some vertex earlier than every other kept one.
/// A bound below the seed order gives an empty catalog.
FamilyCatalog generate_family(FamilyId family, int n_max);

/// Labeling of the input tree (on its own vertex ids) witnessing membership.
struct Recognition {
    LabeledTree labeled;
    Derivation derivation;
    std::vector<Vertex> to_input;  // replay vertex -> input vertex
};

/// Catalog lookup. Throws Error if `t` is not a tree or exceeds the bound.
std::optional<Recognition> recognize(const FamilyCatalog& catalog, const Graph& t);

/// Builds the catalog up to |t| and looks `t` up; throws if |t| > n_cap.
std::optional<Recognition> recognize(FamilyId family, const Graph& t, int n_cap);

struct Violation {
    std::string clause;
    std::string detail;
};

/// Structural properties every member of the family satisfies. Clause keys:
///   U:  support_status, leaf_status, c_neighborhood, b_neighborhood, independence
///   T:  support_iff_ab, leaf_iff_c, class_sizes, unique_gamma_set,
///       semitotal_set, ab_neighbors, de_shape
///   T1: support_iff_ab, leaf_iff_c, class_sizes, semitotal_set, total_set,
///       ab_neighbors, d_shape
/// Throws Error if a status falls outside the family's alphabet.
std::vector<Violation> validate_labeling(const LabeledTree& lt, FamilyId family);

/// The stored derivation introducing member vertex x at the earliest step.
const DerivationRecord& earliest_derivation(const FamilyMember& member, Vertex x);

/// Step-by-step construction of an almost semitotal dominating set relative
/// to an A-vertex x, run on the replayed tree. Returned ids are replay ids.
std::vector<Vertex> almost_semitotal_by_derivation(const Derivation& d, Vertex x_replay);

struct AlmostSetOutcome {
    std::vector<Vertex> set;  // member ids, sorted
    bool used_fallback = false;
};

/// Almost semitotal dominating set of size gamma_t2 - 1 containing every
/// A-vertex, built from the derivation. `to_member` maps replay ids to lt's
/// ids; when empty, replay(d) must equal lt exactly. If the constructed set
/// misses its postcondition, the exact solver supplies a minimum set
/// containing all A-vertices and used_fallback is set.
AlmostSetOutcome build_almost_semitotal_set(const LabeledTree& lt, const Derivation& d,
                                           Vertex x, std::span<const Vertex> to_member = {});

}  // namespace semidom
