#include "cvur/serialization.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace cvur {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw SchemaError("$: not valid JSON");
  return doc;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path + ": expected a number");
  return j.get<double>();
}

Eigen::VectorXd vector_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of numbers");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = number_at(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

Eigen::MatrixXd matrix_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path + ": expected an array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Eigen::MatrixXd m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    const Eigen::VectorXd row = vector_at(j[i], row_path);
    if (static_cast<std::size_t>(row.size()) != cols) {
      throw SchemaError(row_path + ": ragged matrix row");
    }
    m.row(static_cast<Eigen::Index>(i)) = row;
  }
  return m;
}

const json& field(const json& j, const char* name, const std::string& parent) {
  const auto it = j.find(name);
  if (it == j.end()) throw SchemaError(parent + "." + name + ": missing field");
  return *it;
}

json to_json_value(double v) {
  // json serializes non-finite doubles as null; keep that explicit.
  return json(v);
}

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

State state_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw SchemaError("$: expected an object");
  const json& type = field(doc, "type", "$");
  if (!type.is_string()) throw SchemaError("$.type: expected a string");

  if (type == "gaussian") {
    const json& ordering_field = field(doc, "ordering", "$");
    if (!ordering_field.is_string()) throw SchemaError("$.ordering: expected a string");
    Ordering ordering;
    try {
      ordering = ordering_from_string(ordering_field.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("$.ordering: ") + e.what());
    }
    GaussianState g;
    g.mean = vector_at(field(doc, "mean", "$"), "$.mean");
    g.cov = matrix_at(field(doc, "cov", "$"), "$.cov");
    g.ordering = ordering;
    const auto d = g.mean.size();
    if (d == 0 || d % 2 != 0) {
      throw SchemaError("$.mean: length must be a positive even number");
    }
    if (g.cov.rows() != d || g.cov.cols() != d) {
      throw SchemaError("$.cov: must be square with the same dimension as mean");
    }
    if ((g.cov - g.cov.transpose()).cwiseAbs().maxCoeff() >
        1e-12 * std::max(1.0, g.cov.cwiseAbs().maxCoeff())) {
      throw SchemaError("$.cov: not symmetric within 1e-12");
    }
    return g.in_ordering(Ordering::xxpp);
  }

  if (type == "fock") {
    const json& modes_field = field(doc, "n_modes", "$");
    if (!modes_field.is_number_integer()) throw SchemaError("$.n_modes: expected an integer");
    const int n_modes = modes_field.get<int>();
    if (n_modes < 1 || n_modes > 2) throw SchemaError("$.n_modes: must be 1 or 2");
    const json& dim_field = field(doc, "dim", "$");
    if (!dim_field.is_number_integer()) throw SchemaError("$.dim: expected an integer");
    const int dim = dim_field.get<int>();
    if (dim < 2) throw SchemaError("$.dim: must be >= 2");
    const Eigen::VectorXd re = vector_at(field(doc, "amplitudes_re", "$"), "$.amplitudes_re");
    const Eigen::VectorXd im = vector_at(field(doc, "amplitudes_im", "$"), "$.amplitudes_im");
    Eigen::Index expected = 1;
    for (int k = 0; k < n_modes; ++k) expected *= dim;
    if (re.size() != expected) {
      throw SchemaError("$.amplitudes_re: expected dim^n_modes entries");
    }
    if (im.size() != expected) {
      throw SchemaError("$.amplitudes_im: expected dim^n_modes entries");
    }
    FockState f;
    f.n_modes = n_modes;
    f.dim = dim;
    f.amplitudes = re + std::complex<double>(0.0, 1.0) * im;
    if (std::abs(f.amplitudes.norm() - 1.0) > 1e-10) {
      throw SchemaError("$.amplitudes_re/_im: state is not normalized within 1e-10");
    }
    return f;
  }

  throw SchemaError("$.type: expected \"gaussian\" or \"fock\"");
}

std::string state_to_json(const State& s) {
  json doc;
  if (const auto* g = std::get_if<GaussianState>(&s)) {
    doc["type"] = "gaussian";
    doc["ordering"] = to_string(g->ordering);
    doc["mean"] = vector_to_json(g->mean);
    json cov = json::array();
    for (Eigen::Index i = 0; i < g->cov.rows(); ++i) {
      cov.push_back(vector_to_json(g->cov.row(i)));
    }
    doc["cov"] = std::move(cov);
  } else {
    const auto& f = std::get<FockState>(s);
    doc["type"] = "fock";
    doc["n_modes"] = f.n_modes;
    doc["dim"] = f.dim;
    doc["amplitudes_re"] = vector_to_json(f.amplitudes.real());
    doc["amplitudes_im"] = vector_to_json(f.amplitudes.imag());
  }
  return doc.dump();
}

QuadratureSet quadratures_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw SchemaError("$: expected an object");
  const json& modes_field = field(doc, "n_modes", "$");
  if (!modes_field.is_number_integer()) throw SchemaError("$.n_modes: expected an integer");
  const int n_modes = modes_field.get<int>();
  if (n_modes < 1) throw SchemaError("$.n_modes: must be >= 1");
  const json& rows = field(doc, "rows", "$");
  if (!rows.is_array() || rows.empty()) {
    throw SchemaError("$.rows: expected a nonempty array");
  }
  Eigen::MatrixXd coeffs(rows.size(), 2 * n_modes);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_path = "$.rows[" + std::to_string(i) + "]";
    if (!rows[i].is_object()) throw SchemaError(row_path + ": expected an object");
    const Eigen::VectorXd a = vector_at(field(rows[i], "a", row_path), row_path + ".a");
    const Eigen::VectorXd ap = vector_at(field(rows[i], "ap", row_path), row_path + ".ap");
    if (a.size() != n_modes) throw SchemaError(row_path + ".a: expected n_modes entries");
    if (ap.size() != n_modes) throw SchemaError(row_path + ".ap: expected n_modes entries");
    coeffs.row(static_cast<Eigen::Index>(i)).head(n_modes) = a;
    coeffs.row(static_cast<Eigen::Index>(i)).tail(n_modes) = ap;
  }
  try {
    return QuadratureSet(n_modes, std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("$.rows: ") + e.what());
  }
}

std::string quadratures_to_json(const QuadratureSet& q) {
  json doc;
  doc["n_modes"] = q.n_modes;
  json rows = json::array();
  for (int i = 0; i < q.rows(); ++i) {
    json row;
    row["a"] = vector_to_json(q.coeffs.row(i).head(q.n_modes));
    row["ap"] = vector_to_json(q.coeffs.row(i).tail(q.n_modes));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

std::string report_to_json(const RelationReport& r) {
  json doc;
  doc["id"] = r.id;
  doc["lhs"] = to_json_value(r.lhs);
  doc["rhs"] = to_json_value(r.rhs);
  doc["slack"] = to_json_value(r.slack);
  doc["saturated"] = r.saturated;
  doc["degenerate"] = r.degenerate;
  json meta = json::object();
  for (const auto& [key, value] : r.meta) meta[key] = to_json_value(value);
  doc["meta"] = std::move(meta);
  return doc.dump();
}

std::string scan_to_json(const ScanResult& r) {
  json doc;
  doc["relation"] = r.relation_id;
  doc["family"] = r.family_id;
  doc["iterations"] = r.iterations;
  doc["seed"] = r.seed;
  doc["optimized"] = r.optimized;
  doc["note"] = "conjecture-support evidence, not an assertion";
  doc["best_slack"] = to_json_value(r.best_slack);
  doc["best_params"] = vector_to_json(r.best_params);
  doc["degenerate_samples"] = r.degenerate_samples;
  json quantiles = json::object();
  for (const auto& [key, value] : r.quantiles) quantiles[key] = to_json_value(value);
  doc["quantiles"] = std::move(quantiles);
  return doc.dump();
}

State load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open state file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return state_from_json(buffer.str());
}

QuadratureSet load_quadratures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open quadrature file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return quadratures_from_json(buffer.str());
}

}  // namespace cvur
