#include "semidom/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace semidom {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string to_json(const SolveResult& r, int indent) {
    Json j;
    j["variant"] = std::string(to_string(r.variant));
    j["value"] = r.value;
    j["witness"] = r.witness;
    j["explored"] = r.explored;
    return dump(j, indent);
}

std::string to_json(const MsdResult& r, int indent) {
    Json j;
    j["k"] = r.k;
    j["witness_edge"] = {r.witness_edge.u, r.witness_edge.v};
    j["base_value"] = r.base_value;
    Json rows = Json::array();
    for (const auto& row : r.table) {
        rows.push_back({{"k", row.k}, {"min", row.min_value}, {"max", row.max_value}});
    }
    j["table"] = std::move(rows);
    return dump(j, indent);
}

std::string to_json(const VerificationReport& r, int indent) {
    Json j;
    j["claim"] = std::string(to_string(r.claim));
    j["verdict"] = r.passed ? "pass" : "fail";
    j["range"] = {{"description", r.range},
                  {"min_order", r.min_order},
                  {"max_order", r.max_order}};
    j["instances"] = r.instances;
    j["counterexamples_total"] = r.counterexamples_total;
    Json cex = Json::array();
    for (const auto& c : r.counterexamples) {
        cex.push_back({{"graph6", c.graph}, {"details", c.details}});
    }
    j["counterexamples"] = std::move(cex);
    Json stats = Json::object();
    for (const auto& [k, v] : r.stats) {
        stats[k] = v;
    }
    j["stats"] = std::move(stats);
    j["elapsed_ms"] = r.elapsed_ms;
    return dump(j, indent);
}

std::string recognition_json(FamilyId family, const std::optional<Recognition>& r, int indent) {
    Json j;
    j["family"] = std::string(to_string(family));
    j["member"] = r.has_value();
    if (r) {
        j["status"] = r->labeled.status_string();
        j["derivation"] = r->derivation.to_string();
        j["mapping"] = r->to_input;
    }
    return dump(j, indent);
}

void write_catalog(std::ostream& out, const FamilyCatalog& catalog) {
    out << kCatalogHeader << '\n';
    // by order, then canonical code
    std::vector<std::pair<const CanonicalCode*, const FamilyMember*>> rows;
    for (const auto& [code, list] : catalog.members) {
        for (const auto& m : list) {
            rows.emplace_back(&code, &m);
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.second->labeled.tree.order() < b.second->labeled.tree.order();
    });
    for (const auto& [code, m] : rows) {
        out << to_string(catalog.family) << '\t' << m->labeled.tree.order() << '\t' << code->code
            << '\t' << m->labeled.status_string() << '\t'
            << (m->derivations.empty() ? std::string("-")
                                       : m->derivations.front().derivation.to_string())
            << '\n';
    }
}

}  // namespace semidom
