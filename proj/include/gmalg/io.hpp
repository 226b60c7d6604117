#pragma once

// JSON documents for rings, algebras, Morita contexts and maps. Every
// top-level document carries a "schema" field. Matrices are lists of rows.

#include <string>

#include <json.hpp>

#include "gmalg/maps.hpp"

namespace gmalg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAlgebraSchema = "gmalg.algebra/1";
inline constexpr const char* kContextSchema = "gmalg.context/1";
inline constexpr const char* kMapSchema = "gmalg.map/1";

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

RingSpec ring_from_json(const Json& j);
Json ring_to_json(const RingSpec& spec);

/// The ring of a document: its "ring" field.
RingSpec document_ring(const Json& doc);

/// Fails with BadInput unless doc["schema"] equals `expected`. A missing
/// schema is accepted.
void expect_schema(const Json& doc, const char* expected);

namespace detail {

[[noreturn]] inline void bad_input(const std::string& what) { fail(ErrorKind::BadInput, what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_input(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline const Json& list(const Json& j, const std::string& what) {
  if (!j.is_array()) bad_input(what + " must be a list");
  return j;
}

}  // namespace detail

template <class S>
S scalar_from_json(const Ring<S>& ring, const Json& j) {
  if constexpr (std::is_same_v<S, Zn>) {
    if (!j.is_number_integer()) detail::bad_input("Zmod scalars must be integers, got " + j.dump());
    return ring.from_int(j.get<std::int64_t>());
  } else {
    if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    detail::bad_input("rational scalars must be integers or \"p/q\" strings, got " + j.dump());
  }
}

template <class S>
Json scalar_to_json(const Ring<S>& ring, const S& x) {
  if constexpr (std::is_same_v<S, Zn>) {
    return ring.rep(x);
  } else {
    return ring.canon(x).str();
  }
}

template <class S>
Vector<S> vector_from_json(const Ring<S>& ring, const Json& j, Eigen::Index len, const std::string& what) {
  detail::list(j, what);
  if (static_cast<Eigen::Index>(j.size()) != len) {
    detail::bad_input(what + " must have length " + std::to_string(len) + ", got " + std::to_string(j.size()));
  }
  Vector<S> v(len);
  for (Eigen::Index i = 0; i < len; ++i) v(i) = scalar_from_json(ring, j[static_cast<std::size_t>(i)]);
  return canon(ring, v);
}

template <class S>
Json vector_to_json(const Ring<S>& ring, const Vector<S>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(ring, v(i)));
  return out;
}

template <class S>
Matrix<S> matrix_from_json(const Ring<S>& ring, const Json& j, Eigen::Index rows, Eigen::Index cols,
                           const std::string& what) {
  detail::list(j, what);
  if (static_cast<Eigen::Index>(j.size()) != rows) {
    detail::bad_input(what + " must have " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  }
  Matrix<S> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    m.row(i) = vector_from_json(ring, j[static_cast<std::size_t>(i)], cols, what + " row").transpose();
  return m;
}

template <class S>
Json matrix_to_json(const Ring<S>& ring, const Matrix<S>& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(ring, Vector<S>(m.row(i).transpose())));
  return out;
}

/// {"dim", "labels", "mul": mul[i][j] = coordinates of e_i e_j, "unit"}
template <class S>
Algebra<S> algebra_from_json(const Ring<S>& ring, const Json& j) {
  const auto dim = detail::field(j, "dim").get<Eigen::Index>();
  if (dim <= 0) detail::bad_input("algebra dim must be positive");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : detail::list(j.at("labels"), "labels")) labels.push_back(l.get<std::string>());
  } else {
    for (Eigen::Index i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  const auto& mul = detail::list(detail::field(j, "mul"), "mul");
  if (static_cast<Eigen::Index>(mul.size()) != dim) detail::bad_input("mul must be dim x dim x dim");
  std::vector<std::vector<Vector<S>>> prods(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& row = detail::list(mul[static_cast<std::size_t>(i)], "mul row");
    if (static_cast<Eigen::Index>(row.size()) != dim) detail::bad_input("mul must be dim x dim x dim");
    for (Eigen::Index k = 0; k < dim; ++k)
      prods[i].push_back(vector_from_json(ring, row[static_cast<std::size_t>(k)], dim, "mul entry"));
  }
  std::optional<Vector<S>> unit;
  if (j.contains("unit") && !j.at("unit").is_null()) unit = vector_from_json(ring, j.at("unit"), dim, "unit");
  return Algebra<S>(ring, std::move(labels), std::move(prods), std::move(unit));
}

template <class S>
Json algebra_body(const Algebra<S>& a) {
  Json j;
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  Json mul = Json::array();
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < a.dim(); ++k) row.push_back(vector_to_json(a.ring(), a.product(i, k)));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  j["unit"] = a.has_unit() ? vector_to_json(a.ring(), a.unit()) : Json(nullptr);
  return j;
}

template <class S>
Json algebra_to_json(const Algebra<S>& a) {
  Json j;
  j["schema"] = kAlgebraSchema;
  j["ring"] = ring_to_json(a.ring().spec());
  const Json body = algebra_body(a);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

namespace detail {

template <class S>
std::vector<Matrix<S>> matrices_from_json(const Ring<S>& ring, const Json& j, std::size_t count, Eigen::Index rows,
                                          Eigen::Index cols, const std::string& what) {
  list(j, what);
  if (j.size() != count) {
    bad_input(what + " must list " + std::to_string(count) + " matrices, got " + std::to_string(j.size()));
  }
  std::vector<Matrix<S>> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(matrix_from_json(ring, j[i], rows, cols, what));
  return out;
}

template <class S>
Json matrices_to_json(const Ring<S>& ring, const std::vector<Matrix<S>>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(ring, m));
  return out;
}

template <class S>
Bimodule<S> bimodule_from_json(const Ring<S>& ring, const Json& j, Eigen::Index left_dim, Eigen::Index right_dim,
                               const std::string& what) {
  Bimodule<S> m;
  m.dim = field(j, "dim").get<Eigen::Index>();
  if (m.dim < 0) bad_input(what + " dim must be nonnegative");
  if (j.contains("labels"))
    for (const auto& l : list(j.at("labels"), what + " labels")) m.labels.push_back(l.get<std::string>());
  m.left = matrices_from_json(ring, field(j, "left"), static_cast<std::size_t>(left_dim), m.dim, m.dim, what + " left");
  m.right =
      matrices_from_json(ring, field(j, "right"), static_cast<std::size_t>(right_dim), m.dim, m.dim, what + " right");
  return m;
}

template <class S>
Json bimodule_to_json(const Ring<S>& ring, const Bimodule<S>& m) {
  Json j;
  j["dim"] = m.dim;
  j["labels"] = m.labels;
  j["left"] = matrices_to_json(ring, m.left);
  j["right"] = matrices_to_json(ring, m.right);
  return j;
}

}  // namespace detail

/// {"A", "B": algebra bodies, "M", "N": {"dim", "labels", "left", "right"},
///  "phi": phi[i] = dimA x dimN matrix with column j = Phi(m_i, n_j),
///  "psi": psi[j] = dimB x dimM matrix with column i = Psi(n_j, m_i)}
template <class S>
MoritaContext<S> context_from_json(const Ring<S>& ring, const Json& j) {
  auto a = algebra_from_json(ring, detail::field(j, "A"));
  auto b = algebra_from_json(ring, detail::field(j, "B"));
  auto m = detail::bimodule_from_json(ring, detail::field(j, "M"), a.dim(), b.dim(), "M");
  auto n = detail::bimodule_from_json(ring, detail::field(j, "N"), b.dim(), a.dim(), "N");
  Pairing<S> phi{detail::matrices_from_json(ring, detail::field(j, "phi"), static_cast<std::size_t>(m.dim), a.dim(),
                                            n.dim, "phi")};
  Pairing<S> psi{detail::matrices_from_json(ring, detail::field(j, "psi"), static_cast<std::size_t>(n.dim), b.dim(),
                                            m.dim, "psi")};
  return MoritaContext<S>(std::move(a), std::move(b), std::move(m), std::move(n), std::move(phi), std::move(psi));
}

template <class S>
Json context_to_json(const MoritaContext<S>& ctx) {
  const auto& r = ctx.ring();
  Json j;
  j["schema"] = kContextSchema;
  j["ring"] = ring_to_json(r.spec());
  j["A"] = algebra_body(ctx.a());
  j["B"] = algebra_body(ctx.b());
  j["M"] = detail::bimodule_to_json(r, ctx.m());
  j["N"] = detail::bimodule_to_json(r, ctx.n());
  j["phi"] = detail::matrices_to_json(r, ctx.phi().table);
  j["psi"] = detail::matrices_to_json(r, ctx.psi().table);
  return j;
}

/// {"matrix": rows}, column j = image of the j-th basis element.
template <class S>
LinMap<S> map_from_json(const Ring<S>& ring, const Json& j, Eigen::Index dim) {
  return matrix_from_json(ring, detail::field(j, "matrix"), dim, dim, "map matrix");
}

template <class S>
Json map_to_json(const Ring<S>& ring, const LinMap<S>& m) {
  Json j;
  j["schema"] = kMapSchema;
  j["matrix"] = matrix_to_json(ring, m);
  return j;
}

inline Json validation_to_json(const ValidationReport& rep) {
  Json j;
  j["valid"] = rep.ok();
  Json v = Json::array();
  for (const auto& x : rep.violations) v.push_back(Json{{"axiom", x.axiom}, {"witness", x.witness}});
  j["violations"] = std::move(v);
  return j;
}

}  // namespace gmalg
