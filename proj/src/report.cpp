#include "nassoc/report.hpp"

#include <set>
#include <sstream>

#include "nassoc/structure.hpp"

namespace nassoc {

namespace {

Json S(const Subspace& U) { return subspace_to_json(U); }

Json subspaces(const std::vector<Subspace>& us) {
  Json out = Json::array();
  for (const auto& u : us) out.push_back(S(u));
  return out;
}

Json opt_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(); }

// Every report starts with the algebra's field, dimension and basis labels.
Json header(const char* command, const Algebra& A) {
  Json labels = Json::array();
  for (std::size_t i = 0; i < A.dim(); ++i) labels.push_back(A.label(i));
  return {{"command", command}, {"field", field_to_json(A.field())}, {"dim", A.dim()}, {"basis", labels}};
}

Json decomposition_json(const SemisimpleBicommutativeDecomposition& d) {
  Json pattern = Json::array();
  for (const auto& a : d.action_pattern)
    pattern.push_back({{"SiU_zero", a.simple_times_complement_zero}, {"USi_zero", a.complement_times_simple_zero}});
  return {{"square", S(d.square)}, {"simples", subspaces(d.simples)}, {"U", S(d.complement)}, {"pattern", pattern}};
}

Json bicommutative_structure_json(const BicommutativePhiFreeStructure& st) {
  Json j{{"R", S(st.radical)},
         {"D", S(st.D)},
         {"E", st.E ? S(*st.E) : Json()},
         {"E_candidates", st.e_candidates},
         {"Z1", S(st.Z1)},
         {"Z2", S(st.Z2)},
         {"D_square_zero", st.d_square_zero},
         {"radical_splits", st.radical_splits},
         {"zsoc_splits", st.zsoc_splits},
         {"failures", st.failures}};
  j["E_decomposition"] = st.e_decomposition ? decomposition_json(*st.e_decomposition) : Json();
  return j;
}

Json refused(const Error& e) { return {{"refused", e.what()}}; }

}  // namespace

Json info_report(const Algebra& A) {
  Json j = header("info", A);
  Json ids = Json::object();
  for (IdentityKind k : kAllIdentityKinds) ids[to_string(k)] = check_identity(A, k);
  j["identities"] = ids;
  j["natural_class"] = in_natural_class(A);
  auto p = nilpotency_profile(A);
  j["nilpotency"] = {{"solvable", p.solvable},
                     {"right_nilpotent", p.right_nilpotent},
                     {"left_nilpotent", p.left_nilpotent},
                     {"weakly_nilpotent", p.weakly_nilpotent},
                     {"nilpotent", p.nilpotent},
                     {"solvable_index", opt_index(p.solvable_index)},
                     {"right_index", opt_index(p.right_index)},
                     {"left_index", opt_index(p.left_index)},
                     {"nilpotent_index", opt_index(p.nilpotent_index)}};
  j["Asq"] = S(square(A, A.whole()));
  return j;
}

Json check_report(const Algebra& A, IdentityKind kind) {
  Json j = header("check", A);
  j["identity"] = to_string(kind);
  auto w = identity_witness(A, kind);
  j["holds"] = !w.has_value();
  j["witness"] = w ? Json{{"failed", to_string(w->failed)}, {"i", w->i}, {"j", w->j}, {"k", w->k}} : Json();
  return j;
}

Json series_report(const Algebra& A, SeriesKind kind) {
  Json j = header("series", A);
  auto s = compute_series(A, kind);
  Json dims = Json::array();
  for (const auto& t : s.terms) dims.push_back(t.dim());
  j["kind"] = to_string(kind);
  j["terms"] = subspaces(s.terms);
  j["dims"] = dims;
  j["terminated"] = s.terminated;
  j["stabilized_at"] = opt_index(s.stabilized_at);
  j["index"] = opt_index(s.index);
  return j;
}

Json radical_report(const Algebra& A, RadicalKind kind, const EnumerationBudget& budget) {
  Json j = header("radical", A);
  Subspace R = radical(A, kind, budget);
  j["which"] = to_string(kind);
  j["radical"] = S(R);
  j["radical_dim"] = R.dim();
  return j;
}

Json frattini_report(const Algebra& A, const EnumerationBudget& budget) {
  Json j = header("frattini", A);
  auto maximal = maximal_subalgebras(A, budget);
  auto fr = frattini_from(A, maximal);
  j["maximal_subalgebras"] = subspaces(maximal);
  j["F"] = S(fr.subalgebra);
  j["phi"] = S(fr.ideal);
  j["phi_free"] = fr.ideal.is_zero();
  return j;
}

Json minimal_ideals_report(const Algebra& A, const EnumerationBudget& budget) {
  Json j = header("minimal-ideals", A);
  Json list = Json::array();
  Subspace soc = A.zero_subspace(), zsoc = A.zero_subspace();
  for (const auto& m : minimal_ideals(A, budget)) {
    bool zero = square(A, m).is_zero();
    list.push_back({{"ideal", S(m)}, {"zero", zero}});
    soc = subspace_sum(soc, m);
    if (zero) zsoc = subspace_sum(zsoc, m);
  }
  j["minimal_ideals"] = list;
  j["socle"] = S(soc);
  j["zero_socle"] = S(zsoc);
  return j;
}

Json chief_series_report(const Algebra& A, const EnumerationBudget& budget) {
  Json j = header("chief-series", A);
  auto cs = chief_series(A, A.zero_subspace(), A.whole(), budget);
  Json dims = Json::array();
  for (std::size_t i = 1; i < cs.ideals.size(); ++i) dims.push_back(cs.ideals[i].dim() - cs.ideals[i - 1].dim());
  j["ideals"] = subspaces(cs.ideals);
  j["factor_dims"] = dims;
  return j;
}

Json decompose_report(const Algebra& A, const EnumerationBudget& budget) {
  Json j = header("decompose", A);
  bool any = false;
  if (check_identity(A, IdentityKind::Bicommutative)) {
    any = true;
    try {
      j["bicommutative_semisimple"] = decomposition_json(decompose_semisimple_bicommutative(A, budget));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Refused) throw;
      j["bicommutative_semisimple"] = refused(e);
    }
  }
  if (check_identity(A, IdentityKind::Assosymmetric)) {
    any = true;
    auto r = assosymmetric_report(A, budget);
    j["assosymmetric"] = {{"applicable", r.applicable},
                          {"reason", r.reason},
                          {"semisimple", r.semisimple},
                          {"semisimple_associative", r.semisimple_associative ? Json(*r.semisimple_associative) : Json()},
                          {"quotient_by_nilradical_associative", r.quotient_by_nilradical_associative},
                          {"nilradical", r.nilradical ? S(*r.nilradical) : Json()}};
  }
  if (check_identity(A, IdentityKind::NovikovLeft)) {
    any = true;
    auto r = novikov_radical_report(A, budget);
    j["novikov"] = {{"R", S(r.radical)},           {"AR", S(r.AR)},
                    {"phi", S(r.frattini_ideal)},  {"AR_is_ideal", r.AR_is_ideal},
                    {"AR_nilpotent", r.AR_nilpotent}, {"ARR_in_phi", r.ARR_in_phi},
                    {"phi_in_Asq", r.phi_in_Asq}};
  }
  if (!any) fail(ErrorKind::Refused, "decompose requires a bicommutative, assosymmetric or Novikov algebra");
  return j;
}

Json split_report(const Algebra& A, const EnumerationBudget& budget) {
  Json j = header("split", A);
  auto sp = phi_free_split(A, budget);
  j["zsoc"] = S(sp.zsoc);
  j["complement"] = S(sp.complement);
  j["bicommutative"] = sp.bicommutative ? bicommutative_structure_json(*sp.bicommutative) : Json();
  j["novikov"] = sp.novikov ? Json{{"R", S(sp.novikov->radical)},
                                   {"C_meet_R", S(sp.novikov->c_cap_r)},
                                   {"A_C_meet_R_zero", sp.novikov->annihilated}}
                            : Json();
  return j;
}

Json verification_to_json(const VerificationReport& r) {
  return {{"check", to_string(r.check)},
          {"statement", describe(r.check)},
          {"applicable", r.applicable},
          {"holds", r.applicable ? Json(r.holds) : Json()},
          {"hypotheses_assumed", r.hypotheses_assumed},
          {"reason", r.applicable ? Json() : Json(r.reason)},
          {"witness", r.witness},
          {"counterexample", r.counterexample},
          {"notes", r.notes}};
}

Json verify_report(const Algebra& A, std::optional<CheckId> check, const VerifyOptions& options) {
  Json j = header("verify", A);
  std::vector<VerificationReport> rs;
  if (check)
    rs.push_back(verify(A, *check, options));
  else
    rs = verify_all(A, options);
  Json list = Json::array();
  std::size_t applicable = 0, failed = 0;
  for (const auto& r : rs) {
    list.push_back(verification_to_json(r));
    applicable += r.applicable;
    failed += r.applicable && !r.holds;
  }
  j["reports"] = list;
  j["summary"] = {{"checks", rs.size()}, {"applicable", applicable}, {"failed", failed}};
  return j;
}

Assumptions assumptions_from_json(const Json& doc, const Algebra& A) {
  if (!doc.is_object()) fail(ErrorKind::Parse, "assumptions: expected a JSON object");
  Assumptions a;
  if (auto it = doc.find("identities"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) fail(ErrorKind::Parse, "assumptions.identities: expected an array");
    for (const auto& k : *it) {
      auto kind = k.is_string() ? parse_identity_kind(k.get<std::string>()) : std::nullopt;
      if (!kind) fail(ErrorKind::Parse, "assumptions.identities: unknown identity " + k.dump());
      a.identities.push_back(*kind);
    }
  }
  if (auto it = doc.find("radical"); it != doc.end() && !it->is_null()) {
    a.radical = subspace_from_json(*it, A.field(), A.dim());
    if (!is_ideal(A, *a.radical)) fail(ErrorKind::Usage, "assumptions.radical is not an ideal");
  }
  if (auto it = doc.find("nilpotent"); it != doc.end() && !it->is_null()) {
    if (!it->is_boolean()) fail(ErrorKind::Parse, "assumptions.nilpotent: expected a boolean");
    a.nilpotent = it->get<bool>();
  }
  for (const auto& key : doc.items())
    if (key.key() != "identities" && key.key() != "radical" && key.key() != "nilpotent")
      fail(ErrorKind::Parse, "assumptions: unknown key \"" + key.key() + "\"");
  return a;
}

Json search_report(const FieldSpec& f, std::size_t n, std::optional<IdentityKind> kind, const SearchOptions& options) {
  Json j{{"command", "search"},
         {"field", field_to_json(f)},
         {"dim", n},
         {"identity", kind ? to_string(*kind) : "any"}};
  if (options.mode == SearchOptions::Mode::Exhaustive) {
    j["mode"] = "exhaustive";
    j["max_nonzero"] = options.max_nonzero ? Json(*options.max_nonzero) : Json();
  } else {
    j["mode"] = "random";
    j["samples"] = options.samples;
    j["seed"] = options.seed;
    j["sparsity"] = options.sparsity;
  }
  Json list = Json::array();
  for_each_search_result(f, n, kind, options, [&](const Algebra& A) { list.push_back(algebra_to_json(A)); });
  j["count"] = list.size();
  j["algebras"] = list;
  return j;
}

Json fixture_to_json(const Fixture& f) {
  Json cert = Json::object();
  for (const auto& [k, v] : f.certified) cert[to_string(k)] = v;
  return {{"name", f.name},
          {"provenance", f.provenance},
          {"certified", cert},
          {"radical", f.radical ? S(*f.radical) : Json()},
          {"algebra", algebra_to_json(f.algebra)}};
}

Json fixtures_report() {
  Json list = Json::array();
  for (const auto& f : builtin_fixtures()) list.push_back(fixture_to_json(f));
  return {{"command", "fixtures"}, {"fixtures", list}};
}

// ---- text rendering ----

namespace {

const std::set<std::string> kListKeys{"algebras", "basis",   "dims",    "factor_dims", "failures", "fixtures",
                                      "ideals",   "maximal_subalgebras", "minimal_ideals", "notes", "pattern",
                                      "products", "reports", "simples", "terms",       "E_simples"};

class TextRenderer {
 public:
  explicit TextRenderer(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  void object(const Json& j, int indent) {
    for (const auto& [key, value] : j.items()) entry(key, value, indent);
  }

  std::string str() const { return out_.str(); }

 private:
  std::vector<std::string> labels_;
  std::ostringstream out_;

  bool is_vector(const Json& v) const {
    if (!v.is_array() || v.size() != labels_.size() || v.empty()) return false;
    for (const auto& c : v)
      if (!c.is_string()) return false;
    return true;
  }
  bool is_subspace(const Json& v) const {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& row : v)
      if (!is_vector(row)) return false;
    return true;
  }
  static bool is_algebra(const Json& v) { return v.is_object() && v.contains("products") && v.contains("field"); }

  std::string vector_text(const Json& v) const {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::string c = v[i].get<std::string>();
      if (c == "0") continue;
      bool neg = c.front() == '-';
      if (neg) c.erase(0, 1);
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      s += (c == "1" ? "" : c + "*") + labels_[i];
    }
    return s.empty() ? "0" : s;
  }

  std::string subspace_text(const Json& v) const {
    std::string s = "span{";
    for (std::size_t r = 0; r < v.size(); ++r) s += (r ? ", " : "") + vector_text(v[r]);
    return s + "}";
  }

  std::string scalar(const Json& v) const {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (is_algebra(v)) return v.dump();
    if (is_subspace(v)) return subspace_text(v);
    if (is_vector(v)) return vector_text(v);
    return v.dump();
  }

  void entry(const std::string& key, const Json& value, int indent) {
    const std::string pad(indent, ' ');
    if (key == "field") {
      out_ << pad << key << ": " << (value.is_object() ? "F_" + value["prime"].dump() : scalar(value)) << "\n";
      return;
    }
    if (key == "basis" && value.is_array()) {
      out_ << pad << key << ":";
      for (const auto& l : value) out_ << " " << scalar(l);
      out_ << "\n";
      return;
    }
    if (value.is_object() && !is_algebra(value)) {
      out_ << pad << key << ":\n";
      object(value, indent + 2);
      return;
    }
    if (value.is_array() && !is_subspace(value) && !is_vector(value)) {
      if (value.empty()) {
        out_ << pad << key << ": " << (kListKeys.count(key) ? "none" : "0") << "\n";
        return;
      }
      bool flat = true;
      for (const auto& x : value) flat = flat && !x.is_object() && !x.is_array();
      if (flat && key != "notes" && key != "failures") {
        out_ << pad << key << ": ";
        for (std::size_t i = 0; i < value.size(); ++i) out_ << (i ? ", " : "") << scalar(value[i]);
        out_ << "\n";
        return;
      }
      out_ << pad << key << ":\n";
      for (const auto& x : value) {
        if (x.is_object() && !is_algebra(x)) {
          out_ << pad << "  -\n";
          object(x, indent + 4);
        } else {
          out_ << pad << "  - " << scalar(x) << "\n";
        }
      }
      return;
    }
    out_ << pad << key << ": " << scalar(value) << "\n";
  }
};

}  // namespace

std::string render_text(const Json& report) {
  std::vector<std::string> labels;
  if (report.contains("basis"))
    for (const auto& l : report["basis"]) labels.push_back(l.get<std::string>());
  TextRenderer t(std::move(labels));
  t.object(report, 0);
  return t.str();
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace nassoc
