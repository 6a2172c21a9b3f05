#include "nassoc/io.hpp"

#include <set>
#include <utility>

#include "nassoc/error.hpp"

namespace nassoc {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorKind::Parse, where + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t index_in(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "index must be an integer");
  auto v = j.get<long long>();
  if (v < 0 || static_cast<unsigned long long>(v) >= n)
    bad(where, "index " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
  return static_cast<std::size_t>(v);
}

}  // namespace

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    bad("field", "unknown field \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.contains("prime")) {
    const Json& p = j["prime"];
    if (!p.is_number_unsigned() && !p.is_number_integer()) bad("field.prime", "must be an integer");
    auto v = p.get<long long>();
    if (v < 2 || v >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(v)))
      bad("field.prime", std::to_string(v) + " is not a prime below 2^31");
    return FieldSpec::prime(static_cast<std::uint32_t>(v));
  }
  bad("field", "expected \"Q\" or {\"prime\": p}");
}

Json field_to_json(const FieldSpec& f) {
  if (!f.is_finite()) return "Q";
  return Json{{"prime", f.p()}};
}

Algebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) bad("document", "expected a JSON object");
  FieldSpec f = field_from_json(member(doc, "field", "document"));
  const Json& dj = member(doc, "dim", "document");
  if (!dj.is_number_integer() || dj.get<long long>() < 0) bad("dim", "must be a nonnegative integer");
  const auto n = dj.get<std::size_t>();
  if (n > 64) bad("dim", "dimension " + std::to_string(n) + " is larger than supported (64)");

  std::vector<std::string> labels;
  if (auto it = doc.find("basis"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) bad("basis", "expected an array of " + std::to_string(n) + " names");
    for (const auto& name : *it) {
      if (!name.is_string()) bad("basis", "names must be strings");
      labels.push_back(name.get<std::string>());
    }
  }

  std::vector<Vector> table(n * n, zero_vector(f, n));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const Json& products = member(doc, "products", "document");
  if (!products.is_array()) bad("products", "expected an array");
  for (std::size_t e = 0; e < products.size(); ++e) {
    const std::string where = "products[" + std::to_string(e) + "]";
    const Json& entry = products[e];
    if (!entry.is_object()) bad(where, "expected an object");
    std::size_t i = index_in(member(entry, "i", where), n, where + ".i");
    std::size_t j = index_in(member(entry, "j", where), n, where + ".j");
    if (!seen.emplace(i, j).second)
      bad(where, "duplicate product entry for (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    const Json& terms = member(entry, "terms", where);
    if (!terms.is_array()) bad(where + ".terms", "expected an array");
    std::set<std::size_t> ks;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      const Json& term = terms[t];
      if (!term.is_object()) bad(tw, "expected an object");
      std::size_t k = index_in(member(term, "k", tw), n, tw + ".k");
      if (!ks.insert(k).second) bad(tw, "duplicate k = " + std::to_string(k));
      const Json& c = member(term, "c", tw);
      std::string text;
      if (c.is_string())
        text = c.get<std::string>();
      else if (c.is_number_integer())
        text = std::to_string(c.get<long long>());
      else
        bad(tw + ".c", "coefficient must be a string");
      try {
        table[i * n + j][k] = Scalar::parse(f, text);
      } catch (const Error& err) {
        bad(tw + ".c", err.what());
      }
    }
  }
  return Algebra(f, n, std::move(table), std::move(labels));
}

Algebra parse_algebra(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

Json algebra_to_json(const Algebra& A) {
  const std::size_t n = A.dim();
  Json products = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& c = A.basis_product(i, j);
      Json terms = Json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) terms.push_back(Json{{"k", k}, {"c", c[k].str()}});
      if (!terms.empty()) products.push_back(Json{{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  Json doc{{"field", field_to_json(A.field())}, {"dim", n}, {"products", std::move(products)}};
  if (!A.labels().empty()) doc["basis"] = A.labels();
  return doc;
}

std::string serialize_algebra(const Algebra& A) { return algebra_to_json(A).dump(2) + "\n"; }

Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Json subspace_to_json(const Subspace& U) {
  Json out = Json::array();
  for (std::size_t r = 0; r < U.dim(); ++r) out.push_back(vector_to_json(U.basis().row(r)));
  return out;
}

Subspace subspace_from_json(const Json& rows, const FieldSpec& f, std::size_t ambient) {
  if (!rows.is_array()) bad("subspace", "expected an array of rows");
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "subspace[" + std::to_string(r) + "]";
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != ambient) bad(where, "expected " + std::to_string(ambient) + " coefficients");
    Vector v;
    for (const auto& c : row) {
      if (!c.is_string()) bad(where, "coefficients must be strings");
      try {
        v.push_back(Scalar::parse(f, c.get<std::string>()));
      } catch (const Error& e) {
        bad(where, e.what());
      }
    }
    vs.push_back(std::move(v));
  }
  return span(vs, ambient, f);
}

}  // namespace nassoc
