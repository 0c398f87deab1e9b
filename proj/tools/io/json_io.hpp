#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wdlab/automorphic.hpp"
#include "wdlab/ffcurve.hpp"
#include "wdlab/multiplicity.hpp"
#include "wdlab/report.hpp"
#include "wdlab/spectral.hpp"
#include "wdlab/weil_deligne.hpp"

namespace wdlab::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "v1";

/// Malformed input; the message starts with the JSON path of the offending field.
class SchemaError : public std::invalid_argument
{
public:
    SchemaError(const std::string& path, const std::string& what) : std::invalid_argument(path + ": " + what) {}
};

Json to_json(const Scalar& s);
Json to_json(const LaurentPoly& f);
Json to_json(const PolyMatrix& m);
Json to_json(const FgModule& m);
Json to_json(const GradedCohomology& h);
Json to_json(const Complex& c);
Json to_json(const WDRep& rep);
Json to_json(const HVector& h);
Json to_json(const SmoothCharacter& chi);
Json to_json(const PeriodEntry& e);
Json to_json(const PeriodTable& t);
Json to_json(const GradedTable& t);
Json to_json(const SpecEis& e);
Json to_json(const HeckeLTable& t);
Json to_json(const Report& r);
Json to_json(const CurveData& c);
Json to_json(const ZetaSeries& z);

// Readers take the field q for irrational scalars and the path used in errors.
Scalar scalar_from_json(const Json& j, std::int64_t q, const std::string& path = "$");
LaurentPoly poly_from_json(const Json& j, std::int64_t q, const std::string& path = "$");
PolyMatrix matrix_from_json(const Json& j, std::int64_t q, const std::string& path = "$");
FgModule module_from_json(const Json& j, std::int64_t q, const std::string& path = "$");
GradedCohomology cohomology_from_json(const Json& j, std::int64_t q, const std::string& path = "$");
Complex complex_from_json(const Json& j, std::int64_t q, const std::string& path = "$");
/// Uses "q" from the document when present, else `default_q`. Validates the representation.
WDRep wdrep_from_json(const Json& j, std::int64_t default_q, const std::string& path = "$");
SmoothCharacter character_from_json(const Json& j, const std::string& path = "$");
PeriodEntry period_entry_from_json(const Json& j, const std::string& path = "$");
PeriodTable period_table_from_json(const Json& j, const std::string& path = "$");
GradedTable graded_table_from_json(const Json& j, const std::string& path = "$");
HeckeLTable hecke_table_from_json(const Json& j, const std::string& path = "$");
Report report_from_json(const Json& j, const std::string& path = "$");
CurveData curve_from_json(const Json& j, const std::string& path = "$");

/// {"order": n, "table": [[...]]}.
FiniteGroup group_from_json(const Json& j, const std::string& path = "$");
Json to_json(const FiniteGroup& g);
/// Rational matrix, one row per irreducible and one column per class.
CharacterTable character_table_from_json(const FiniteGroup& g, const Json& j, const std::string& path = "$");

/// Parses text; parse errors become SchemaError at "$".
Json parse(const std::string& text);
Json load_file(const std::string& path);

}  // namespace wdlab::io
