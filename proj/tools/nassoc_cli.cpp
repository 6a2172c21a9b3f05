#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nassoc/nassoc.h"

namespace {

int exit_code(nassoc_status s) {
  switch (s) {
    case NASSOC_OK: return 0;
    case NASSOC_ERR_VIOLATION: return 1;
    case NASSOC_ERR_UNSUPPORTED:
    case NASSOC_ERR_REFUSED: return 3;
    default: return 2;
  }
}

int report_error(nassoc_status s) {
  std::cerr << "error: " << nassoc_status_name(s) << ": " << nassoc_last_error() << "\n";
  return exit_code(s);
}

// Prints and frees a library string.
void print(char* s) {
  std::cout << s;
  if (s[0] && s[std::strlen(s) - 1] != '\n') std::cout << "\n";
  nassoc_string_free(s);
}

struct Algebra {
  nassoc_algebra* handle = nullptr;
  ~Algebra() { nassoc_algebra_free(handle); }
};

// FILE may also name a builtin fixture as "fixture:NAME".
nassoc_status load(const std::string& file, Algebra& a) {
  const std::string prefix = "fixture:";
  if (file.rfind(prefix, 0) == 0) return nassoc_fixture(file.substr(prefix.size()).c_str(), &a.handle);
  return nassoc_algebra_load(file.c_str(), &a.handle);
}

std::string file_name_for(const std::string& fixture) {
  std::string out;
  for (char c : fixture) {
    if (c == '+')
      out += "_plus_";
    else if (c == '/')
      out += "_mod_";
    else if (c != '(' && c != ')')
      out += c;
  }
  return out + ".json";
}

int emit_fixtures(const std::string& dir) {
  char* names = nullptr;
  if (auto s = nassoc_fixture_names(&names); s != NASSOC_OK) return report_error(s);
  std::istringstream in(names);
  nassoc_string_free(names);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << dir << ": " << ec.message() << "\n";
    return 2;
  }
  std::string name;
  while (std::getline(in, name)) {
    Algebra a;
    char* text = nullptr;
    nassoc_status s = nassoc_fixture(name.c_str(), &a.handle);
    if (s == NASSOC_OK) s = nassoc_algebra_serialize(a.handle, &text);
    if (s != NASSOC_OK) return report_error(s);
    auto path = std::filesystem::path(dir) / file_name_for(name);
    std::ofstream(path, std::ios::binary) << text;
    nassoc_string_free(text);
    std::cout << name << " -> " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for finite-dimensional nonassociative algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "text";
  nassoc_budget budget = nassoc_default_budget();
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget-vectors", budget.max_vectors, "Largest number of vectors an enumeration may visit");
  app.add_option("--budget-subspaces", budget.max_subspaces, "Largest number of subspaces an enumeration may visit");

  std::string file, identity, kind, which, check, field = "2", emit_dir, assume_file;
  bool all = false, exhaustive = false;
  std::size_t dim = 2;
  nassoc_search_options search = nassoc_default_search_options();
  long max_nonzero = -1;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "Algebra file, or fixture:NAME")->required();
    return sub;
  };
  auto* info = with_file("info", "Identities, nilpotency profile and A^2");
  auto* check_cmd = with_file("check", "Test one identity on basis triples");
  check_cmd->add_option("--identity", identity, "Identity name")->required();
  auto* series = with_file("series", "One of the four descending series");
  series->add_option("--kind", kind, "derived, rightPower, leftPower or bracketPower")->required();
  auto* radical = with_file("radical", "Solvable, nil, right-nil or left-nil radical");
  radical->add_option("--which", which, "Radical kind")
      ->required()
      ->check(CLI::IsMember({"solvable", "nil", "right-nil", "left-nil"}));
  auto* frattini = with_file("frattini", "Maximal subalgebras, F(A) and phi(A)");
  auto* minimal = with_file("minimal-ideals", "Minimal ideals, socle and zero socle");
  auto* chief = with_file("chief-series", "A chief series from 0 to A");
  auto* decompose = with_file("decompose", "Structure reports for the bicommutative, assosymmetric and Novikov classes");
  auto* split = with_file("split", "Splitting of a phi-free algebra over its zero socle");
  auto* verify = with_file("verify", "Run checks from the theorem catalogue");
  auto* all_flag = verify->add_flag("--all", all, "Run every check");
  auto* check_opt = verify->add_option("--check", check, "Run one check");
  verify->add_option("--assume", assume_file, "JSON file of hypotheses to take on trust")->check(CLI::ExistingFile);
  all_flag->excludes(check_opt);
  check_opt->excludes(all_flag);

  auto* search_cmd = app.add_subcommand("search", "Structure-constant tables satisfying an identity");
  search_cmd->add_option("--field", field, "Q, p or F_p")->required();
  search_cmd->add_option("--dim", dim, "Dimension")->required();
  search_cmd->add_option("--identity", identity, "Identity name, or any")->required();
  auto* exh = search_cmd->add_flag("--exhaustive", exhaustive, "Visit every table");
  auto* samples = search_cmd->add_option("--samples", search.samples, "Random tables to draw");
  search_cmd->add_option("--seed", search.seed, "Random seed");
  search_cmd->add_option("--sparsity", search.sparsity, "Probability that a random constant is zero")
      ->check(CLI::Range(0.0, 1.0));
  search_cmd->add_option("--max-nonzero", max_nonzero, "Exhaustive: bound on nonzero constants");
  exh->excludes(samples);

  auto* fixtures = app.add_subcommand("fixtures", "List the builtin fixtures");
  fixtures->add_option("--emit", emit_dir, "Write each fixture as an algebra file into DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const nassoc_format fmt = output == "json" ? NASSOC_FORMAT_JSON : NASSOC_FORMAT_TEXT;
  char* out = nullptr;
  nassoc_status s = NASSOC_OK;

  if (*fixtures) {
    if (!emit_dir.empty()) return emit_fixtures(emit_dir);
    s = nassoc_fixtures(fmt, &out);
    if (s != NASSOC_OK) return report_error(s);
    print(out);
    return 0;
  }
  if (*search_cmd) {
    search.exhaustive = exhaustive || !samples->count();
    search.max_nonzero = max_nonzero;
    s = nassoc_search(field.c_str(), dim, identity.c_str(), &search, fmt, &out);
    if (s != NASSOC_OK) return report_error(s);
    print(out);
    return 0;
  }

  Algebra a;
  if (s = load(file, a); s != NASSOC_OK) return report_error(s);
  std::size_t failed = 0;
  if (*info)
    s = nassoc_info(a.handle, fmt, &out);
  else if (*check_cmd)
    s = nassoc_check(a.handle, identity.c_str(), fmt, &out);
  else if (*series)
    s = nassoc_series(a.handle, kind.c_str(), fmt, &out);
  else if (*radical)
    s = nassoc_radical(a.handle, which.c_str(), budget, fmt, &out);
  else if (*frattini)
    s = nassoc_frattini(a.handle, budget, fmt, &out);
  else if (*minimal)
    s = nassoc_minimal_ideals(a.handle, budget, fmt, &out);
  else if (*chief)
    s = nassoc_chief_series(a.handle, budget, fmt, &out);
  else if (*decompose)
    s = nassoc_decompose(a.handle, budget, fmt, &out);
  else if (*split)
    s = nassoc_split(a.handle, budget, fmt, &out);
  else if (*verify) {
    if (!all && check.empty()) {
      std::cerr << "error: verify needs --all or --check ID\n";
      return 2;
    }
    std::string assumptions;
    if (!assume_file.empty()) {
      std::ifstream in(assume_file, std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      assumptions = text.str();
    }
    s = nassoc_verify_assuming(a.handle, all ? nullptr : check.c_str(),
                               assume_file.empty() ? nullptr : assumptions.c_str(), budget, fmt, &failed, &out);
  }
  if (s != NASSOC_OK) return report_error(s);
  print(out);
  return failed > 0 ? 1 : 0;
}
