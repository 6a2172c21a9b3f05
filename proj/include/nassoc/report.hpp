#pragma once

#include <optional>
#include <string>

#include "nassoc/corpus.hpp"
#include "nassoc/series.hpp"
#include "nassoc/verify.hpp"

namespace nassoc {

// One JSON document per command; the layout is documented in
// docs/report_schema.md. Objects are key-sorted.
Json info_report(const Algebra& A);
Json check_report(const Algebra& A, IdentityKind kind);
Json series_report(const Algebra& A, SeriesKind kind);
Json radical_report(const Algebra& A, RadicalKind kind, const EnumerationBudget& budget);
Json frattini_report(const Algebra& A, const EnumerationBudget& budget);
Json minimal_ideals_report(const Algebra& A, const EnumerationBudget& budget);
Json chief_series_report(const Algebra& A, const EnumerationBudget& budget);
Json decompose_report(const Algebra& A, const EnumerationBudget& budget);
Json split_report(const Algebra& A, const EnumerationBudget& budget);
Json verification_to_json(const VerificationReport& r);
// With no check, every check in catalogue order.
Json verify_report(const Algebra& A, std::optional<CheckId> check, const VerifyOptions& options);
// {"identities": [...], "radical": rows or null, "nilpotent": bool}; every
// key optional. Hypotheses taken on trust, for replaying corrupted tables.
Assumptions assumptions_from_json(const Json& doc, const Algebra& A);
Json search_report(const FieldSpec& f, std::size_t n, std::optional<IdentityKind> kind, const SearchOptions& options);
Json fixture_to_json(const Fixture& f);
Json fixtures_report();

// Human-readable rendering; subspaces print as span{...} over the basis
// labels found in the report (e1, e2, ... by default).
std::string render_text(const Json& report);
std::string render_json(const Json& report);

}  // namespace nassoc
