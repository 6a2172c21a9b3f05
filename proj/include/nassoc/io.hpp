#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "nassoc/algebra.hpp"

namespace nassoc {

using Json = nlohmann::json;

// The algebra file format: {"field": "Q" | {"prime": p}, "dim": n,
// "basis": [names]?, "products": [{"i", "j", "terms": [{"k", "c"}]}]} with
// 0-based indices and coefficient strings. Absent products are zero.
Algebra parse_algebra(std::string_view text);
Algebra algebra_from_json(const Json& doc);
Json algebra_to_json(const Algebra& A);
std::string serialize_algebra(const Algebra& A);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json vector_to_json(std::span<const Scalar> v);
// RREF basis rows as coefficient strings.
Json subspace_to_json(const Subspace& U);
// Rows of coefficient strings; the rows need not be reduced.
Subspace subspace_from_json(const Json& rows, const FieldSpec& f, std::size_t ambient);

}  // namespace nassoc
