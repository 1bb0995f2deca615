#include "serialize.hpp"

#include <algorithm>
#include <cstdio>

#include "errors.hpp"

namespace g2forge {

std::string scalar_str(const Scalar& s) { return s.str(); }

OrderedJson scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    auto parsed = Scalar::parse(v.get<std::string>());
    if (!parsed) throw bad_input("cannot parse scalar value '" + v.get<std::string>() + "'");
    return *parsed;
  }
  if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
  if (v.is_number_float()) return Scalar(v.get<double>());
  throw bad_input("scalar value must be a number or a \"p/q\" string");
}

OrderedJson form_json(const KForm& f) {
  OrderedJson out;
  out["degree"] = f.degree();
  // Keys ordered lexicographically by blade label for byte-stable reports.
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [b, c] : f.terms()) rows.emplace_back(b.label(), c.str());
  std::sort(rows.begin(), rows.end());
  OrderedJson coeffs = OrderedJson::object();
  for (auto& [label, value] : rows) coeffs[label] = value;
  out["coefficients"] = std::move(coeffs);
  return out;
}

KForm form_from_json(const nlohmann::json& v) {
  if (!v.is_object() || !v.contains("degree") || !v.contains("coefficients"))
    throw bad_input("form value must carry 'degree' and 'coefficients'");
  KForm f(v["degree"].get<int>());
  for (const auto& [label, value] : v["coefficients"].items()) {
    auto blade = Blade::from_label(label);
    if (!blade) throw bad_input("invalid blade label '" + label + "'");
    f.add_term(*blade, scalar_from_json(value));
  }
  return f;
}

OrderedJson matrix_json(const Matrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& v, std::size_t rows, std::size_t cols) {
  if (!v.is_array() || v.size() != rows) throw bad_input("matrix has wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols)
      throw bad_input("matrix has wrong number of columns");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar_from_json(v[i][j]);
  }
  return m;
}

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace g2forge
