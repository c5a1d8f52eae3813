#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "turaev/bundle.hpp"
#include "turaev/report.hpp"

namespace turaev {

using Json = nlohmann::json;

inline constexpr int kInstanceFormatVersion = 1;

/// Field-independent form of an instance file. All scalars are exact
/// strings ("3", "-2/5"); there is no floating point anywhere in the
/// format. Structure constants are sparse (i, j, k, value) records.
struct InstanceText {
  FieldSpec field;
  std::vector<std::vector<int>> cayley;
  std::size_t dim = 0;
  std::vector<std::tuple<int, int, int, std::string>> mu;
  std::vector<std::string> unit, trace;
  std::vector<std::vector<std::vector<std::string>>> rho;  // [g][row][col]
  std::vector<std::vector<std::vector<std::string>>> c;    // [g][h][coord]
  std::vector<std::string> c_e;
};

namespace detail {

inline const Json& fetch(const Json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + path + "'");
  return *it;
}

inline std::string scalar_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError("scalar at '" + path + "' must be a string");
  return j.get<std::string>();
}

inline std::vector<std::string> scalar_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("'" + path + "' must be an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(scalar_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

/// Structural parse of the JSON document; no field arithmetic happens
/// here. Throws ParseError with the offending path.
inline InstanceText parse_instance_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
  }
  InstanceText t;
  const int version = detail::fetch(j, "format_version", "format_version").get<int>();
  if (version != kInstanceFormatVersion)
    throw ParseError("unsupported format_version " + std::to_string(version));

  {
    const Json& f = detail::fetch(j, "field", "field");
    const std::string kind = detail::fetch(f, "kind", "field.kind").get<std::string>();
    if (kind == "rationals") {
      t.field = {FieldSpec::Kind::rationals, 0};
    } else if (kind == "prime-field") {
      const std::uint64_t p = detail::fetch(f, "p", "field.p").get<std::uint64_t>();
      if (!is_prime(p)) throw ParseError("field.p must be prime");
      t.field = {FieldSpec::Kind::prime_field, p};
    } else {
      throw ParseError("field.kind must be 'rationals' or 'prime-field'");
    }
  }

  {
    const Json& g = detail::fetch(j, "group", "group");
    const std::size_t order = detail::fetch(g, "order", "group.order").get<std::size_t>();
    const Json& cay = detail::fetch(g, "cayley", "group.cayley");
    if (!cay.is_array() || cay.size() != order)
      throw ParseError("group.cayley must be an array of 'order' rows");
    for (const Json& row : cay) {
      if (!row.is_array() || row.size() != order)
        throw ParseError("group.cayley rows must have length 'order'");
      t.cayley.push_back(row.get<std::vector<int>>());
    }
  }

  {
    const Json& a = detail::fetch(j, "algebra", "algebra");
    t.dim = detail::fetch(a, "dim", "algebra.dim").get<std::size_t>();
    const Json& mu = detail::fetch(a, "mu", "algebra.mu");
    if (!mu.is_array()) throw ParseError("algebra.mu must be an array");
    for (std::size_t r = 0; r < mu.size(); ++r) {
      const Json& rec = mu[r];
      const std::string path = "algebra.mu[" + std::to_string(r) + "]";
      if (!rec.is_array() || rec.size() != 4) throw ParseError(path + " must be [i, j, k, value]");
      const int i = rec[0].get<int>(), jj = rec[1].get<int>(), k = rec[2].get<int>();
      if (i < 0 || jj < 0 || k < 0 || static_cast<std::size_t>(i) >= t.dim ||
          static_cast<std::size_t>(jj) >= t.dim || static_cast<std::size_t>(k) >= t.dim)
        throw ParseError(path + " index out of range");
      t.mu.emplace_back(i, jj, k, detail::scalar_string(rec[3], path + ".value"));
    }
    t.unit = detail::scalar_vector(detail::fetch(a, "unit", "algebra.unit"), "algebra.unit");
    t.trace = detail::scalar_vector(detail::fetch(a, "trace", "algebra.trace"), "algebra.trace");
    if (t.unit.size() != t.dim || t.trace.size() != t.dim)
      throw ParseError("algebra.unit and algebra.trace must have length 'dim'");
  }

  {
    const Json& act = detail::fetch(j, "action", "action");
    const std::size_t order = t.cayley.size();
    const Json& rho = detail::fetch(act, "rho", "action.rho");
    if (!rho.is_array() || rho.size() != order)
      throw ParseError("action.rho must have one matrix per group element");
    for (std::size_t g = 0; g < order; ++g) {
      const Json& mat = rho[g];
      const std::string path = "action.rho[" + std::to_string(g) + "]";
      if (!mat.is_array() || mat.size() != t.dim) throw ParseError(path + " must be a dim x dim matrix");
      std::vector<std::vector<std::string>> rows;
      for (std::size_t r = 0; r < t.dim; ++r) {
        auto row = detail::scalar_vector(mat[r], path + "[" + std::to_string(r) + "]");
        if (row.size() != t.dim) throw ParseError(path + " must be a dim x dim matrix");
        rows.push_back(std::move(row));
      }
      t.rho.push_back(std::move(rows));
    }
    const Json& c = detail::fetch(act, "c", "action.c");
    if (!c.is_array() || c.size() != order)
      throw ParseError("action.c must be an order x order table");
    for (std::size_t g = 0; g < order; ++g) {
      if (!c[g].is_array() || c[g].size() != order)
        throw ParseError("action.c must be an order x order table");
      std::vector<std::vector<std::string>> row;
      for (std::size_t h = 0; h < order; ++h) {
        auto v = detail::scalar_vector(c[g][h], "action.c[" + std::to_string(g) + "][" +
                                                    std::to_string(h) + "]");
        if (v.size() != t.dim) throw ParseError("action.c entries must have length 'dim'");
        row.push_back(std::move(v));
      }
      t.c.push_back(std::move(row));
    }
    t.c_e = detail::scalar_vector(detail::fetch(act, "c_e", "action.c_e"), "action.c_e");
    if (t.c_e.size() != t.dim) throw ParseError("action.c_e must have length 'dim'");
  }

  return t;
}

/// Interprets the scalars of a parsed instance in the field K and
/// assembles the bundle. Group-table defects surface as ValidationError.
template <Field K>
TwistedBundle<K> instance_to_bundle(const InstanceText& t) {
  TwistedBundle<K> B;
  try {
    B.group = FiniteGroup::from_cayley_table(t.cayley);
  } catch (const Error& e) {
    throw ValidationError(std::string("group table: ") + e.what());
  }
  std::vector<K> mu(t.dim * t.dim * t.dim);
  for (const auto& [i, j, k, value] : t.mu)
    mu[(static_cast<std::size_t>(i) * t.dim + j) * t.dim + k] = K::parse(value);
  auto parse_vec = [](const std::vector<std::string>& v) {
    Vec<K> out;
    out.reserve(v.size());
    for (const std::string& s : v) out.push_back(K::parse(s));
    return out;
  };
  B.algebra = AlgebraData<K>(t.dim, std::move(mu), parse_vec(t.unit), parse_vec(t.trace));
  for (const auto& mat : t.rho) {
    Matrix<K> m(t.dim, t.dim);
    for (std::size_t r = 0; r < t.dim; ++r)
      for (std::size_t ccol = 0; ccol < t.dim; ++ccol) m(r, ccol) = K::parse(mat[r][ccol]);
    B.rho.push_back(std::move(m));
  }
  for (const auto& row : t.c) {
    std::vector<Vec<K>> out;
    for (const auto& v : row) out.push_back(parse_vec(v));
    B.twist.push_back(std::move(out));
  }
  B.twist_e = parse_vec(t.c_e);
  return B;
}

/// Full load path: structural parse, field interpretation, and (unless
/// skipped for negative testing) eager validation of every bundle law.
template <Field K>
TwistedBundle<K> parse_instance(const std::string& text, bool skip_validate = false) {
  const InstanceText t = parse_instance_text(text);
  TwistedBundle<K> B = instance_to_bundle<K>(t);
  if (!skip_validate) {
    const Report rep = validate_bundle(B);
    if (!rep.all_pass())
      throw ValidationError("instance failed validation:\n" + rep.summary());
  }
  return B;
}

/// Canonical serialization: sparse nonzero structure constants in row-major
/// order, exact scalar strings, two-space indentation, sorted keys.
/// parse(serialize(B)) reconstructs B exactly, and serializing again is
/// byte-identical.
template <Field K>
std::string serialize_instance(const TwistedBundle<K>& B) {
  Json j;
  j["format_version"] = kInstanceFormatVersion;
  const FieldSpec fs = field_spec_of<K>();
  if (fs.kind == FieldSpec::Kind::rationals) {
    j["field"] = {{"kind", "rationals"}};
  } else {
    j["field"] = {{"kind", "prime-field"}, {"p", fs.characteristic}};
  }
  j["group"] = {{"order", B.group.order()}, {"cayley", B.group.cayley()}};

  Json mu = Json::array();
  const std::size_t n = B.algebra.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k) {
        const K& v = B.algebra.mu_at(i, jj, k);
        if (!v.is_zero()) mu.push_back(Json::array({i, jj, k, v.str()}));
      }
  auto vec_json = [](const Vec<K>& v) {
    Json out = Json::array();
    for (const K& x : v) out.push_back(x.str());
    return out;
  };
  j["algebra"] = {{"dim", n},
                  {"mu", std::move(mu)},
                  {"unit", vec_json(B.algebra.unit)},
                  {"trace", vec_json(B.algebra.trace)}};

  Json rho = Json::array();
  for (const Matrix<K>& m : B.rho) {
    Json mat = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) mat.push_back(vec_json(m.row(r)));
    rho.push_back(std::move(mat));
  }
  Json c = Json::array();
  for (const auto& row : B.twist) {
    Json crow = Json::array();
    for (const Vec<K>& v : row) crow.push_back(vec_json(v));
    c.push_back(std::move(crow));
  }
  j["action"] = {{"rho", std::move(rho)}, {"c", std::move(c)}, {"c_e", vec_json(B.twist_e)}};
  return j.dump(2) + "\n";
}

// ---- reports ----

inline Json report_to_json(const Report& rep) {
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks)
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  return {{"checks", std::move(checks)},
          {"failed", rep.fail_count()},
          {"total", rep.checks.size()}};
}

inline Report report_from_json(const Json& j) {
  Report rep;
  for (const Json& c : detail::fetch(j, "checks", "checks")) {
    const std::string status = detail::fetch(c, "status", "checks[].status").get<std::string>();
    if (status != "pass" && status != "fail")
      throw ParseError("check status must be 'pass' or 'fail'");
    rep.add(detail::fetch(c, "name", "checks[].name").get<std::string>(), status == "pass",
            detail::fetch(c, "witness", "checks[].witness").get<std::string>());
  }
  return rep;
}

}  // namespace turaev
