#pragma once

#include "qhc/catalog.hpp"
#include "qhc/connection.hpp"
#include "qhc/curve.hpp"
#include "qhc/module.hpp"

#include <json.hpp>

#include <string>

namespace qhc {

/// Insertion-ordered JSON, so reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InputError naming the source, line
/// and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// Array of d strings "p/q" on the basis 1, a, ..., a^{d-1} of `field`.
Json field_element_to_json(const FieldElement& c, const Field& field);
/// Accepts such an array, or a single string/number for a rational.
/// `where` names the JSON location in error messages.
FieldElement field_element_from_json(const Json& j, const Field& field, const std::string& where);

/// CurveSpec: {"field": {"min_poly": [...]}, "weights": [wx, wy],
/// "f": [{"coeff", "x", "y"}], "branches": [{"kind", "a", "b"}]}.
/// Emission always includes weights and branches.
Json curve_to_json(const QuasiCurve& curve);
QuasiCurve curve_from_json(const Json& j);

/// ModuleSpec with 1-based branch and basis indices:
/// {"cover": [{"branch", "shifts"}], "generators": [[{"branch", "index", "coeff", "exp"}]]}.
Json module_to_json(const GradedSubmodule& m, const Field& field);
GradedSubmodule module_from_json(const Json& j, const QuasiCurve& curve);

Json element_to_json(const ModuleElement& v, const Field& field);

// Reports.
Json curve_info_report(const QuasiCurve& curve);
Json branches_report(const QuasiCurve& curve);
/// Per branch: the closed form of Gamma_i and its agreement with the oracle
/// on [0, bound]; bound defaults to c_i + 10 when negative.
Json semigroups_report(const QuasiCurve& curve, int bound);
Json derivations_report(const QuasiCurve& curve);
Json module_check_report(const QuasiCurve& curve, const GradedSubmodule& m);
Json connection_report_to_json(const QuasiCurve& curve, const ConnectionReport& report);
Json catalog_entry_report(const CatalogEntry& entry);
Json fixtures_report(const CatalogEntry& entry);

/// Indented "key: value" rendering of a report for --format text.
std::string render_text(const Json& j);

} // namespace qhc
