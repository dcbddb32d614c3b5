#include "shoda/json_io.hpp"

#include <sstream>

namespace shoda::json {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int to_int(const Json& j) {
  if (!j.is_number_integer()) parse_fail("expected an integer");
  return j.get<int>();
}

BlockPair parse_key(const std::string& key) {
  std::istringstream in(key);
  int i = 0;
  int j = 0;
  char comma = 0;
  if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) parse_fail("bad pair key \"" + key + "\"");
  return {i - 1, j - 1};
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

Json to_json(Scalar z) { return Json::array({z.real(), z.imag()}); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number()) return Scalar(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Scalar(j[0].get<double>(), j[1].get<double>());
  parse_fail("expected a complex number [re, im]");
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(cols) + " columns");
    for (int c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[c]);
  }
  return m;
}

Json to_json(const AlgebraSpec& spec) { return Json{{"blocks", spec.block_dims()}}; }

AlgebraSpec spec_from_json(const Json& j) {
  const Json& blocks = member(j, "blocks");
  if (!blocks.is_array()) parse_fail("\"blocks\" must be an array");
  std::vector<int> dims;
  for (const auto& b : blocks) dims.push_back(to_int(b));
  return AlgebraSpec(std::move(dims));
}

Json to_json(const Element& a) {
  Json blocks = Json::array();
  for (const auto& b : a.blocks()) blocks.push_back(to_json(b));
  return Json{{"blocks", std::move(blocks)}};
}

Element element_from_json(const AlgebraSpec& spec, const Json& j) {
  const Json& blocks = member(j, "blocks");
  if (!blocks.is_array() || static_cast<int>(blocks.size()) != spec.num_blocks())
    fail(ErrorKind::ShapeMismatch, "element has the wrong number of blocks");
  std::vector<Matrix> out;
  for (int i = 0; i < spec.num_blocks(); ++i)
    out.push_back(matrix_from_json(blocks[i], spec.block_dim(i), spec.block_dim(i)));
  return Element(spec, std::move(out));
}

Json to_json(const AJElement& u) {
  Json terms = Json::object();
  for (const auto& [key, m] : u.terms())
    terms[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = to_json(m);
  return Json{{"terms", std::move(terms)}};
}

AJElement aj_from_json(const AlgebraSpec& spec, const Json& j) {
  const Json& terms = member(j, "terms");
  if (!terms.is_object()) parse_fail("\"terms\" must be an object");
  AJElement u(spec);
  for (const auto& [key, value] : terms.items()) {
    const auto [i, jj] = parse_key(key);
    if (i < 0 || jj < 0 || i >= spec.num_blocks() || jj >= spec.num_blocks() || i == jj)
      fail(ErrorKind::InvalidArgument, "pair key \"" + key + "\" is not an off-diagonal block pair");
    u.accumulate(i, jj, matrix_from_json(value, spec.block_dim(i), spec.block_dim(jj)));
  }
  return u;
}

Json to_json(const BElement& x) { return Json{{"a", to_json(x.a)}, {"u", to_json(x.u)}}; }

BElement belement_from_json(const AlgebraSpec& spec, const Json& j) {
  return BElement{element_from_json(spec, member(j, "a")), aj_from_json(spec, member(j, "u"))};
}

namespace {

Json values_to_json(const std::vector<SpectralValue>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(Json{{"value", to_json(v.value)}, {"multiplicity", v.multiplicity}});
  return out;
}

}  // namespace

Json to_json(const SpectrumReport& s) {
  return Json{{"eigenvalues", values_to_json(s.eigenvalues)},
              {"nonzero_part", values_to_json(s.nonzero_part)},
              {"threshold", s.threshold}};
}

Json to_json(const ShodaReport& r) {
  Json corner = Json::array();
  for (const auto& c : r.criterion_corner)
    corner.push_back(Json{{"rank", c.rank}, {"dimension", c.dimension}, {"expected", c.expected}});
  Json out{{"verdict", r.verdict},
           {"criterion_minimal_ideal", r.criterion_minimal_ideal},
           {"criterion_single_Jp", r.criterion_single_Jp},
           {"criterion_corner", std::move(corner)},
           {"criterion_connectivity", r.criterion_connectivity}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return out;
}

Json to_json(const TraceCertificate& c) {
  Json traces = Json::array();
  for (Scalar s : c.block_traces) traces.push_back(to_json(s));
  return Json{{"block_traces", std::move(traces)}, {"certified", c.certified}};
}

Json to_json(const CommutatorWitness<Element>& w) {
  return Json{{"kind", "algebra"}, {"a", to_json(w.a)}, {"b", to_json(w.b)}, {"residual", w.residual}};
}

Json to_json(const CommutatorWitness<BElement>& w) {
  return Json{{"kind", "completion"}, {"a", to_json(w.a)}, {"b", to_json(w.b)}, {"residual", w.residual}};
}

Json to_json(const CompletionResult& r, bool include_table) {
  Json out{{"N", r.N},
           {"total_dim", r.total_dim},
           {"radical_dim", r.radical_dim},
           {"components", r.components},
           {"iso_residual", r.iso_residual},
           {"radical_a_part", r.radical_a_part}};
  if (include_table) {
    const auto& alg = r.quotient.algebra;
    Json table = Json::array();
    for (Scalar s : alg.table()) table.push_back(to_json(s));
    out["table"] = std::move(table);
    out["table_dim"] = alg.dim();
  }
  return out;
}

Json error_to_json(const std::string& name, const std::string& detail) {
  return Json{{"error", name}, {"detail", detail}};
}

}  // namespace shoda::json
