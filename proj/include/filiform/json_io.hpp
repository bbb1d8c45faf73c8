#pragma once

// JSON serialization for scalars, vectors, matrices, algebras and the report
// types the command line emits.  Insertion-ordered objects keep every dump
// byte-identical for identical inputs.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "filiform/errors.hpp"
#include "filiform/inner_product.hpp"
#include "filiform/lie_algebra.hpp"
#include "filiform/matrix.hpp"
#include "filiform/radnum.hpp"
#include "filiform/rational.hpp"
#include "filiform/subspace.hpp"

namespace filiform::jsonio {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

template <class S>
struct scalar_kind;
template <>
struct scalar_kind<Rational> {
  static constexpr const char* name = "rational";
};
template <>
struct scalar_kind<RadNum> {
  static constexpr const char* name = "radical";
};

inline Json scalar_json(const Rational& q) { return to_string(q); }

/// RadNum: array of {radicand, coeff} terms, sorted by radicand.
inline Json scalar_json(const RadNum& x) {
  Json a = Json::array();
  for (const auto& [s, c] : x.terms()) {
    Json t;
    t["radicand"] = s.convert_to<long long>();
    t["coeff"] = to_string(c);
    a.push_back(std::move(t));
  }
  return a;
}

template <class S>
S scalar_from_json(const Json& j);

template <>
inline Rational scalar_from_json<Rational>(const Json& j) {
  if (!j.is_string()) throw ParseError("rational scalar must be a string");
  return parse_rational(j.get<std::string>());
}

template <>
inline RadNum scalar_from_json<RadNum>(const Json& j) {
  if (j.is_string()) return RadNum(parse_rational(j.get<std::string>()));
  if (!j.is_array()) throw ParseError("radical scalar must be an array");
  RadNum x;
  for (const auto& t : j)
    x += RadNum::radical(Int(t.at("radicand").get<long long>()),
                         parse_rational(t.at("coeff").get<std::string>()));
  return x;
}

template <class S>
Json vec_json(const Vec<S>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

template <class S>
Vec<S> vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vec<S> v;
  for (const auto& x : j) v.push_back(scalar_from_json<S>(x));
  return v;
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

template <class S>
Matrix<S> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array");
  std::vector<Vec<S>> rows;
  for (const auto& r : j) rows.push_back(vec_from_json<S>(r));
  return Matrix<S>::from_rows(rows);
}

template <class S>
Json algebra_json(const LieAlgebra<S>& g) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = g.dim();
  j["scalar"] = scalar_kind<S>::name;
  j["graded"] = g.graded();
  Json br = Json::array();
  for (const auto& [ij, v] : g.structure()) {
    Json b;
    b["i"] = ij.first;
    b["j"] = ij.second;
    b["value"] = vec_json(v);
    br.push_back(std::move(b));
  }
  j["brackets"] = std::move(br);
  return j;
}

using AnyAlgebra = std::variant<LieAlgebra<Rational>, LieAlgebra<RadNum>>;

template <class S>
LieAlgebra<S> algebra_from_json_as(const Json& j) {
  int n = j.at("dim").get<int>();
  if (n < 1) throw ParseError("dim must be positive");
  LieAlgebra<S> g(n, j.value("graded", false));
  for (const auto& b : j.at("brackets")) {
    int i = b.at("i").get<int>();
    int k = b.at("j").get<int>();
    g.set_bracket(i, k, vec_from_json<S>(b.at("value")));
  }
  return g;
}

inline AnyAlgebra algebra_from_json(const Json& j) {
  std::string kind = j.value("scalar", "rational");
  if (kind == "rational") return algebra_from_json_as<Rational>(j);
  if (kind == "radical") return algebra_from_json_as<RadNum>(j);
  throw ParseError("unknown scalar kind '" + kind + "'");
}

template <class S>
Json ip_json(const InnerProduct<S>& ip) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["gram"] = matrix_json(ip.gram());
  return j;
}

template <class S>
InnerProduct<S> ip_from_json(const Json& j) {
  return InnerProduct<S>(matrix_from_json<S>(j.at("gram")));
}

template <class S>
Json subspace_json(const Subspace<S>& h) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json rows = Json::array();
  for (const auto& v : h.basis()) rows.push_back(vec_json(v));
  j["basis"] = std::move(rows);
  return j;
}

template <class S>
Subspace<S> subspace_from_json(const Json& j, std::size_t ambient) {
  std::vector<Vec<S>> rows;
  for (const auto& r : j.at("basis")) rows.push_back(vec_from_json<S>(r));
  for (const auto& r : rows)
    if (r.size() != ambient)
      throw ParseError("subspace basis vector has wrong length");
  return Subspace<S>::span(ambient, rows);
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError("cannot parse '" + path + "': " + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << dump(j);
}

}  // namespace filiform::jsonio
