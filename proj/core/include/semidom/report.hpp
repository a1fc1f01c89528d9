#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "semidom/families.hpp"
#include "semidom/msd.hpp"
#include "semidom/solvers.hpp"
#include "semidom/verify.hpp"

namespace semidom {

// JSON renderings with a fixed field order. `indent` < 0 gives one line.

/// {"variant","value","witness","explored"}
std::string to_json(const SolveResult& r, int indent = -1);

/// {"k","witness_edge","base_value","table":[{"k","min","max"}]}
std::string to_json(const MsdResult& r, int indent = -1);

/// {"claim","verdict","range":{...},"instances","counterexamples_total",
///  "counterexamples":[{"graph6","details"}],"stats":{...},"elapsed_ms"}
std::string to_json(const VerificationReport& r, int indent = -1);

/// {"family","member","status","derivation","mapping"}; `r` empty when the
/// tree is not a member.
std::string recognition_json(FamilyId family, const std::optional<Recognition>& r,
                             int indent = -1);

inline constexpr const char* kCatalogHeader =
    "# family\tn\tcanonical_code\tstatus_string\tderivation";

/// Header line, then one tab-separated line per member in catalog order.
void write_catalog(std::ostream& out, const FamilyCatalog& catalog);

}  // namespace semidom
