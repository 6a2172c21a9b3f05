#include "nassoc/nassoc.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "nassoc/report.hpp"

struct nassoc_algebra {
  nassoc::Algebra algebra;
};

namespace {

using namespace nassoc;

thread_local std::string g_error;

nassoc_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return NASSOC_ERR_USAGE;
    case ErrorKind::Domain: return NASSOC_ERR_DOMAIN;
    case ErrorKind::Parse: return NASSOC_ERR_PARSE;
    case ErrorKind::Unsupported: return NASSOC_ERR_UNSUPPORTED;
    case ErrorKind::Refused: return NASSOC_ERR_REFUSED;
    case ErrorKind::Violation: return NASSOC_ERR_VIOLATION;
  }
  return NASSOC_ERR_INTERNAL;
}

template <class F>
nassoc_status guarded(F&& body) {
  try {
    body();
    g_error.clear();
    return NASSOC_OK;
  } catch (const Error& e) {
    g_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_error = e.what();
    return NASSOC_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorKind::Usage, std::string(what) + " must not be NULL");
}

EnumerationBudget budget_of(nassoc_budget b) { return {b.max_vectors, b.max_subspaces}; }

void emit(const Json& report, nassoc_format fmt, char** out) {
  need(out, "out");
  *out = dup(fmt == NASSOC_FORMAT_TEXT ? render_text(report) : render_json(report));
}

const Algebra& alg(const nassoc_algebra* a) {
  need(a, "algebra");
  return a->algebra;
}

IdentityKind identity_arg(const char* s) {
  need(s, "identity");
  auto k = parse_identity_kind(s);
  if (!k) fail(ErrorKind::Usage, std::string("unknown identity \"") + s + "\"");
  return *k;
}

FieldSpec field_arg(const char* s) {
  need(s, "field");
  std::string t(s);
  if (t == "Q") return FieldSpec::rationals();
  if (t.rfind("F_", 0) == 0)
    t.erase(0, 2);
  else if (t.rfind("F", 0) == 0)
    t.erase(0, 1);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 10)
    fail(ErrorKind::Usage, std::string("unknown field \"") + s + "\" (expected Q, p or F_p)");
  auto p = std::stoull(t);
  if (p >= (1ULL << 31) || !is_prime(p)) fail(ErrorKind::Usage, t + " is not a prime below 2^31");
  return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

}  // namespace

extern "C" {

nassoc_budget nassoc_default_budget(void) {
  EnumerationBudget b;
  return {b.max_vectors, b.max_subspaces};
}

nassoc_search_options nassoc_default_search_options(void) {
  SearchOptions o;
  return {1, -1, o.max_tables, o.samples, o.seed, o.sparsity};
}

const char* nassoc_last_error(void) { return g_error.c_str(); }

const char* nassoc_status_name(nassoc_status s) {
  switch (s) {
    case NASSOC_OK: return "ok";
    case NASSOC_ERR_USAGE: return "usage error";
    case NASSOC_ERR_DOMAIN: return "domain error";
    case NASSOC_ERR_PARSE: return "parse error";
    case NASSOC_ERR_UNSUPPORTED: return "unsupported";
    case NASSOC_ERR_REFUSED: return "refused";
    case NASSOC_ERR_VIOLATION: return "theorem violation";
    case NASSOC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nassoc_string_free(char* s) { std::free(s); }

nassoc_status nassoc_algebra_parse(const char* json, nassoc_algebra** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new nassoc_algebra{parse_algebra(json)};
  });
}

nassoc_status nassoc_algebra_load(const char* path, nassoc_algebra** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, std::string("cannot read ") + path);
    std::ostringstream text;
    text << in.rdbuf();
    *out = new nassoc_algebra{parse_algebra(text.str())};
  });
}

nassoc_status nassoc_fixture(const char* name, nassoc_algebra** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    auto f = find_fixture(name);
    if (!f) fail(ErrorKind::Usage, std::string("no fixture named \"") + name + "\"");
    *out = new nassoc_algebra{f->algebra};
  });
}

void nassoc_algebra_free(nassoc_algebra* a) { delete a; }

size_t nassoc_algebra_dim(const nassoc_algebra* a) { return a ? a->algebra.dim() : 0; }

nassoc_status nassoc_algebra_serialize(const nassoc_algebra* a, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(serialize_algebra(alg(a)));
  });
}

nassoc_status nassoc_check_identity(const nassoc_algebra* a, const char* identity, int* holds) {
  return guarded([&] {
    need(holds, "holds");
    *holds = check_identity(alg(a), identity_arg(identity)) ? 1 : 0;
  });
}

nassoc_status nassoc_info(const nassoc_algebra* a, nassoc_format fmt, char** out) {
  return guarded([&] { emit(info_report(alg(a)), fmt, out); });
}

nassoc_status nassoc_check(const nassoc_algebra* a, const char* identity, nassoc_format fmt, char** out) {
  return guarded([&] { emit(check_report(alg(a), identity_arg(identity)), fmt, out); });
}

nassoc_status nassoc_series(const nassoc_algebra* a, const char* kind, nassoc_format fmt, char** out) {
  return guarded([&] {
    need(kind, "kind");
    auto k = parse_series_kind(kind);
    if (!k) fail(ErrorKind::Usage, std::string("unknown series kind \"") + kind + "\"");
    emit(series_report(alg(a), *k), fmt, out);
  });
}

nassoc_status nassoc_radical(const nassoc_algebra* a, const char* which, nassoc_budget budget, nassoc_format fmt,
                             char** out) {
  return guarded([&] {
    need(which, "which");
    auto k = parse_radical_kind(which);
    if (!k) fail(ErrorKind::Usage, std::string("unknown radical \"") + which + "\"");
    emit(radical_report(alg(a), *k, budget_of(budget)), fmt, out);
  });
}

nassoc_status nassoc_frattini(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt, char** out) {
  return guarded([&] { emit(frattini_report(alg(a), budget_of(budget)), fmt, out); });
}

nassoc_status nassoc_minimal_ideals(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt, char** out) {
  return guarded([&] { emit(minimal_ideals_report(alg(a), budget_of(budget)), fmt, out); });
}

nassoc_status nassoc_chief_series(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt, char** out) {
  return guarded([&] { emit(chief_series_report(alg(a), budget_of(budget)), fmt, out); });
}

nassoc_status nassoc_decompose(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt, char** out) {
  return guarded([&] { emit(decompose_report(alg(a), budget_of(budget)), fmt, out); });
}

nassoc_status nassoc_split(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt, char** out) {
  return guarded([&] { emit(split_report(alg(a), budget_of(budget)), fmt, out); });
}

nassoc_status nassoc_verify_assuming(const nassoc_algebra* a, const char* check, const char* assumptions,
                                     nassoc_budget budget, nassoc_format fmt, size_t* failed, char** out) {
  return guarded([&] {
    std::optional<CheckId> id;
    if (check) {
      id = parse_check_id(check);
      if (!id) fail(ErrorKind::Usage, std::string("unknown check \"") + check + "\"");
    }
    VerifyOptions opts;
    opts.budget = budget_of(budget);
    if (assumptions) {
      Json doc = Json::parse(assumptions, nullptr, false);
      if (doc.is_discarded()) fail(ErrorKind::Parse, "assumptions: malformed JSON");
      opts.assume = assumptions_from_json(doc, alg(a));
    }
    Json report = verify_report(alg(a), id, opts);
    if (failed) *failed = report["summary"]["failed"].get<std::size_t>();
    emit(report, fmt, out);
  });
}

nassoc_status nassoc_verify(const nassoc_algebra* a, const char* check, nassoc_budget budget, nassoc_format fmt,
                            size_t* failed, char** out) {
  return nassoc_verify_assuming(a, check, nullptr, budget, fmt, failed, out);
}

nassoc_status nassoc_search(const char* field, size_t dim, const char* identity, const nassoc_search_options* options,
                            nassoc_format fmt, char** out) {
  return guarded([&] {
    FieldSpec f = field_arg(field);
    std::optional<IdentityKind> kind;
    if (identity && std::strcmp(identity, "any") != 0) kind = identity_arg(identity);
    nassoc_search_options o = options ? *options : nassoc_default_search_options();
    SearchOptions so;
    so.mode = o.exhaustive ? SearchOptions::Mode::Exhaustive : SearchOptions::Mode::Random;
    if (o.max_nonzero >= 0) so.max_nonzero = static_cast<std::size_t>(o.max_nonzero);
    so.max_tables = o.max_tables;
    so.samples = o.samples;
    so.seed = o.seed;
    if (!(o.sparsity >= 0.0 && o.sparsity <= 1.0)) fail(ErrorKind::Usage, "sparsity must lie in [0, 1]");
    so.sparsity = o.sparsity;
    if (dim > 8) fail(ErrorKind::Usage, "search dimension is limited to 8");
    emit(search_report(f, dim, kind, so), fmt, out);
  });
}

nassoc_status nassoc_fixtures(nassoc_format fmt, char** out) {
  return guarded([&] { emit(fixtures_report(), fmt, out); });
}

nassoc_status nassoc_fixture_names(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string names;
    for (const auto& f : builtin_fixtures()) names += f.name + "\n";
    *out = dup(names);
  });
}

nassoc_status nassoc_check_names(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string names;
    for (CheckId id : all_checks()) names += to_string(id) + "\n";
    *out = dup(names);
  });
}

}  // extern "C"
