#include "hsk/json_io.hpp"

#include <limits>

#include "hsk/error.hpp"

namespace hsk {

Json bigint_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

mpz_class bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw UsageError("malformed big integer");
    return v;
  }
  throw UsageError("expected an integer");
}

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Scalar& s, bool with_embedding) {
  Json out;
  out["den"] = bigint_to_json(s.denominator());
  Json num = Json::array();
  if (s.is_zero()) {
    // Zero is written with the full coefficient vector when the field is known.
    if (s.field()) {
      for (int i = 0; i < s.field()->degree(); ++i) num.push_back(0);
    }
  } else {
    for (const auto& c : s.numerators()) num.push_back(bigint_to_json(c));
  }
  out["num"] = std::move(num);
  if (with_embedding) out["embed"] = complex_to_json(s.embed());
  return out;
}

Scalar scalar_from_json(const Params& p, const Json& j) {
  if (!j.is_object() || !j.contains("den") || !j.contains("num") || !j["num"].is_array()) {
    throw UsageError("scalar JSON needs \"den\" and \"num\"");
  }
  mpz_class den = bigint_from_json(j["den"]);
  if (den <= 0) throw UsageError("scalar denominator must be positive");
  std::vector<mpz_class> num;
  for (const auto& c : j["num"]) num.push_back(bigint_from_json(c));
  return Scalar::from_parts(field_of(p), std::move(den), std::move(num));
}

Json to_json(const YoungDiagram& d) {
  Json out = Json::array();
  for (int r : d.rows()) out.push_back(r);
  return out;
}

YoungDiagram diagram_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("diagram must be a JSON array of row lengths");
  std::vector<int> rows;
  for (const auto& r : j) {
    if (!r.is_number_integer()) throw UsageError("diagram rows must be integers");
    rows.push_back(r.get<int>());
  }
  return YoungDiagram(std::move(rows));
}

Json to_json(const HeckeElement& x) {
  const auto& table = PermutationTable::get(x.strands());
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json t;
    t["perm"] = table.one_line(w);
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["n"] = x.strands();
  out["terms"] = std::move(terms);
  return out;
}

HeckeElement element_from_json(const Params& p, const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw UsageError("element JSON needs \"n\" and \"terms\"");
  }
  const int n = j["n"].get<int>();
  const auto& table = PermutationTable::get(n);
  HeckeElement x(p, n);
  for (const auto& t : j["terms"]) {
    OneLine w = t.at("perm").get<OneLine>();
    x.add_term(table.index_of(w), scalar_from_json(p, t.at("coeff")));
  }
  return x;
}

Json to_json(const Matrix& m, bool with_embedding) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j), with_embedding));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Params& p, const Json& j) {
  if (!j.is_array()) throw UsageError("matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j[0].size()) : 0;
  Matrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols) throw UsageError("ragged matrix");
    for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(p, j[r][c]);
  }
  return m;
}

}  // namespace hsk
