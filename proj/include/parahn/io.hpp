#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "parahn/hn.hpp"
#include "parahn/theta.hpp"

namespace parahn {

using Json = nlohmann::json;  // keys sorted on output

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kReportSchemaId = "urn:parahn:schema:report:1.0.0";

// Parsed input document. The bundle is absent only for family documents
// that omit flags.
struct Spec {
  const Field* field = nullptr;
  SplitBundle bundle;
  std::optional<ParabolicBundle> V;
  Json raw;
};

// Throws ParseError (malformed JSON), SchemaError (wrong shape or type) and
// ConsistencyError (cross-field checks); messages start with the JSON path.
Spec parse_spec(const std::string& text);
ParabolicBundle parse_bundle(const Json& doc, const std::string& path = "");

// Field elements: decimal strings for prime fields, coefficient arrays otherwise.
Json to_json(const Field& f, Elem x);
Elem elem_from_json(const Field& f, const Json& j, const std::string& path);

Json to_json(const Rat& r);
Json to_json(const HNDatum& d);
Json to_json(const QuotDatum& q);
Json to_json(const Subbundle& W);
Json to_json(const ParabolicBundle& V);
Json to_json(const WeightRegion& R);

HNDatum datum_from_json(const Json& j, const std::string& path);
HNDatum datum_from_list(const std::string& csv);
QuotDatum quot_from_json(const Json& j, const std::string& path);
FiltrationDatum fil_from_json(const Json& j, const std::string& path);

// Matrix of polynomials: rows of entries, each a coefficient list low to high.
PolyMat polymat_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path);
// {"col_twists": [...], "matrix": n x r polynomial entries}; validated.
Subbundle subbundle_from_json(const SplitBundle& E, const Json& j, const std::string& path);
ThetaFiltration theta_from_json(const ParabolicBundle& V, const Json& j, const std::string& path);
// Flags of the "family" block, with points and weights from the top level.
FlagFamily family_from_json(const Spec& spec, const Json& j, const std::string& path);

struct RunOptions {
  std::string format = "json";
  Budget budget;
  int extend = 1;
  std::optional<std::string> datum;
};

struct Report {
  Json body;  // everything except timing
  double timing_ms = 0;
  int exit_code = 0;
};

// Never throws for domain failures: errors are embedded in the report.
Report run_command(const std::string& cmd, const std::string& input, const RunOptions& opts);

// Deterministic JSON text with sorted keys.
std::string render_json(const Report& r, bool with_timing = true);
std::string render_markdown(const Report& r);

std::string sha256_hex(const std::string& data);

}  // namespace parahn
