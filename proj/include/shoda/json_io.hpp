#pragma once
// JSON forms of every value the library exchanges. Complex numbers are
// [re, im] pairs; block indices in keys are 1-based.

#include <string>

#include <json.hpp>

#include "shoda/commutator.hpp"
#include "shoda/completion.hpp"
#include "shoda/norms.hpp"
#include "shoda/spectral.hpp"

namespace shoda::json {

using Json = nlohmann::json;

/// Throws ParseError on malformed text.
Json parse(const std::string& text);

Json to_json(Scalar z);
/// Accepts [re, im] or a bare real number.
Scalar scalar_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int rows, int cols);

/// {"blocks": [2, 3]}
Json to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const Json& j);

/// {"blocks": [block, ...]}, each block a list of rows.
Json to_json(const Element& a);
Element element_from_json(const AlgebraSpec& spec, const Json& j);

/// {"terms": {"1,2": matrix, ...}}
Json to_json(const AJElement& u);
AJElement aj_from_json(const AlgebraSpec& spec, const Json& j);

/// {"a": Element, "u": AJElement}
Json to_json(const BElement& x);
BElement belement_from_json(const AlgebraSpec& spec, const Json& j);

Json to_json(const SpectrumReport& s);
Json to_json(const ShodaReport& r);
Json to_json(const TraceCertificate& c);
Json to_json(const CommutatorWitness<Element>& w);
Json to_json(const CommutatorWitness<BElement>& w);

/// Summary fields; the dense table of A_S structure constants on request.
Json to_json(const CompletionResult& r, bool include_table);

Json error_to_json(const std::string& name, const std::string& detail);

}  // namespace shoda::json
