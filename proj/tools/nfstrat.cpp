// nfstrat: stratification and acyclicity analyses for set-theory formulas,
// plus permutation-invariance checks on finite membership digraphs.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "nfstrat/json_io.hpp"

using namespace nfstrat;

namespace {

constexpr int EXIT_NEGATIVE = 1;
constexpr int EXIT_USAGE = 2;

struct Options {
  std::string format = "text";
  int limit = 8;
  unsigned seed = 0;
  std::string expect;
};

std::string read_formula_arg(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open formula file: " + file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
  }
  return inline_text;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return json::parse(in);
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

// Exit code against --expect: 0 when the verdict matches, 1 otherwise.
int expect_exit(const Options& opt, const std::string& verdict, int default_code = 0) {
  if (opt.expect.empty()) return default_code;
  return verdict == opt.expect ? 0 : EXIT_NEGATIVE;
}

std::string types_text(const TypeAssignment& t) {
  std::string out = "stratified: yes\ntypes:";
  for (const auto& [v, lvl] : t.types) out += " " + v + "=" + std::to_string(lvl);
  return out + "\n";
}

std::string witness_text(const CycleWitness& cw) {
  std::string out = "stratified: no\ncycle (net weight " + std::to_string(cw.net_weight) + "):\n";
  for (const CycleStep& s : cw.steps)
    out += "  atom " + std::to_string(s.atom_position) + ": " + s.from + " -> " + s.to +
           " (weight " + std::to_string(s.weight) + ")\n";
  return out;
}

std::string indexing_text(const OccurrenceIndexing& pi, const RngSummary& s, const char* label,
                          bool positive) {
  std::string out = "indices:";
  for (int v : flat_indices(pi)) out += " " + std::to_string(v);
  out += "\nrng:";
  for (const auto& [v, r] : s.rng) out += " " + v + "=" + std::to_string(r);
  out += "\nsum " + std::to_string(s.total) + ", vars " + std::to_string(s.var_count);
  out += std::string("\n") + label + ": " + (positive ? "yes" : "no") + "\n";
  return out;
}

std::string report_text(const InvarianceReport& r) {
  std::string out = std::string("verdict: ") + verdict_name(r.verdict) + "\n";
  out += "permutations tested: " + std::to_string(r.permutations_tested) + " (rejected " +
         std::to_string(r.permutations_rejected) + ")\n";
  for (const Violation& v : r.violations) {
    out += "violation: perm [";
    for (std::size_t i = 0; i < v.perm.size(); ++i)
      out += (i ? " " : "") + std::to_string(v.perm[i]);
    out += "] witness " + std::to_string(v.witness) + " expected " +
           (v.expected ? "true" : "false") + " got " + (v.got ? "true" : "false") + "\n";
  }
  return out;
}

int run_model_report(const Options& opt, const InvarianceReport& rep, const json& j,
                     const std::string& text) {
  emit(opt, j, text);
  std::string verdict = verdict_name(rep.verdict);
  if (!opt.expect.empty()) return expect_exit(opt, verdict);
  switch (rep.verdict) {
    case Verdict::Invariant: return 0;
    case Verdict::Violated: return EXIT_NEGATIVE;
    case Verdict::Vacuous: return EXIT_USAGE;
  }
  return EXIT_USAGE;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratification, acyclicity and permutation-invariance analyses"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limit", opt.limit, "permutation enumeration limit (universe size)");
  app.add_option("--seed", opt.seed, "seed for sampled modes");
  app.add_option("--expect", opt.expect, "expected verdict; exit 1 on mismatch")
      ->check(CLI::IsMember(
          {"invariant", "violated", "stratified", "unstratified", "acyclic", "cyclic"}));

  std::string formula_text, formula_file;
  auto add_formula_args = [&](CLI::App* cmd) {
    cmd->fallthrough();  // let global options (--format, --expect, ...) follow the subcommand
    cmd->add_option("formula", formula_text, "formula text");
    cmd->add_option("--file", formula_file, "read the formula from a file");
  };

  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and print its AST");
  add_formula_args(cmd_parse);

  auto* cmd_stratify = app.add_subcommand("stratify", "decide stratifiability with a witness");
  add_formula_args(cmd_stratify);

  bool phf = false;
  auto* cmd_canon = app.add_subcommand("canon", "canonical occurrence indexing");
  add_formula_args(cmd_canon);
  cmd_canon->add_flag("--phf", phf, "also print the j^n'f prefixed transform");

  bool dot = false;
  auto* cmd_acyclic = app.add_subcommand("acyclic", "acyclic occurrence indexing");
  add_formula_args(cmd_acyclic);
  cmd_acyclic->add_flag("--dot", dot, "also print the variable graph in DOT form");

  int max_atoms = 4, max_vars = 4;
  auto* cmd_compare = app.add_subcommand("compare", "cross-validate indexings against oracles");
  cmd_compare->fallthrough();
  cmd_compare->add_option("--max-atoms", max_atoms, "maximum atoms per formula");
  cmd_compare->add_option("--max-vars", max_vars, "maximum distinct variables");

  auto* cmd_model = app.add_subcommand("model", "finite-model invariance lab");
  cmd_model->fallthrough();
  cmd_model->require_subcommand(1);

  std::string model_file, constraints_file, class_var = "y", demo_name;
  auto* m_check = cmd_model->add_subcommand("check", "check one comprehension instance");
  m_check->fallthrough();
  m_check->add_option("--model", model_file, "model JSON file")->required();
  m_check->add_option("--formula", formula_text, "formula text");
  m_check->add_option("--file", formula_file, "read the formula from a file");
  m_check->add_option("--class-var", class_var, "membership variable of the comprehension");
  m_check->add_option("--constraints", constraints_file, "constraint spec JSON file");

  auto* m_demo = cmd_model->add_subcommand("demo", "run a curated fixture");
  m_demo->fallthrough();
  bool list_demos = false;
  m_demo->add_option("name", demo_name, "demo name");
  m_demo->add_flag("--list", list_demos, "list demo names");

  auto* m_auto = cmd_model->add_subcommand("automorphisms", "enumerate automorphisms");
  m_auto->fallthrough();
  m_auto->add_option("--model", model_file, "model JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : EXIT_USAGE;
  }

  try {
    if (*cmd_parse) {
      FormulaPtr f = parse(read_formula_arg(formula_text, formula_file));
      emit(opt, ast_to_json(*f), render(*f) + "\n");
      return 0;
    }

    if (*cmd_stratify) {
      FormulaPtr f = parse(read_formula_arg(formula_text, formula_file));
      StratifyResult r = stratify(*f);
      bool ok = std::holds_alternative<TypeAssignment>(r);
      emit(opt, stratify_to_json(r),
           ok ? types_text(std::get<TypeAssignment>(r)) : witness_text(std::get<CycleWitness>(r)));
      return expect_exit(opt, ok ? "stratified" : "unstratified");
    }

    if (*cmd_canon) {
      FormulaPtr f = parse(read_formula_arg(formula_text, formula_file));
      OccurrenceIndexing pi = canonical_index(*f);
      RngSummary s = rng_summary(pi);
      bool stratified = s.total == s.var_count;
      json j = indexing_to_json(pi, s);
      std::string text = indexing_text(pi, s, "stratified", stratified);
      if (phf) {
        std::string t = phf_transform(*f, pi);
        j["phf"] = t;
        j["setlike_bound"] = 2 * pi.formula.occurrence_count();
        text += t + "\n";
      }
      emit(opt, j, text);
      return expect_exit(opt, stratified ? "stratified" : "unstratified");
    }

    if (*cmd_acyclic) {
      FormulaPtr f = parse(read_formula_arg(formula_text, formula_file));
      OccurrenceIndexing pi = acyclic_index(*f);
      RngSummary s = rng_summary(pi);
      bool acyclic = s.total == s.var_count;
      json j = indexing_to_json(pi, s);
      std::string text = indexing_text(pi, s, "acyclic", acyclic);
      if (dot) {
        std::string t = to_dot(build_var_graph(*f));
        j["dot"] = t;
        text += t;
      }
      emit(opt, j, text);
      return expect_exit(opt, acyclic ? "acyclic" : "cyclic");
    }

    if (*cmd_compare) {
      auto t0 = std::chrono::steady_clock::now();
      CompareStats s = compare_corpus(max_atoms, max_vars);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::string text = "formulas: " + std::to_string(s.formulas) + "\nstratified: " +
                         std::to_string(s.stratified) + "\nacyclic: " + std::to_string(s.acyclic) +
                         "\ncanonical disagreements: " +
                         std::to_string(s.canonical_disagreements.size()) +
                         "\nacyclic disagreements: " +
                         std::to_string(s.acyclic_disagreements.size()) +
                         "\nacyclic-but-unstratified: " +
                         std::to_string(s.implication_violations.size()) + "\nelapsed: " +
                         std::to_string(ms) + " ms\n";
      for (const auto& x : s.canonical_disagreements) text += "  canonical!= " + x + "\n";
      for (const auto& x : s.acyclic_disagreements) text += "  acyclic!= " + x + "\n";
      for (const auto& x : s.implication_violations) text += "  implication!= " + x + "\n";
      emit(opt, compare_to_json(s), text);
      return s.clean() ? 0 : EXIT_NEGATIVE;
    }

    if (*m_check) {
      Digraph d = digraph_from_json(load_json_file(model_file));
      FormulaPtr f = parse(read_formula_arg(formula_text, formula_file));
      ConstraintSpec spec;
      if (!constraints_file.empty()) spec = constraints_from_json(load_json_file(constraints_file));
      InvarianceReport rep =
          invariance_survey(d, *f, class_var, spec.bindings, spec.constraints, opt.limit);
      return run_model_report(opt, rep, report_to_json(rep), report_text(rep));
    }

    if (*m_demo) {
      if (list_demos) {
        for (const auto& n : demo_names()) std::cout << n << "\n";
        return 0;
      }
      if (demo_name.empty()) {
        std::cerr << "demo name required (see --list)\n";
        return EXIT_USAGE;
      }
      DemoResult r = demo(demo_name);
      return run_model_report(opt, r.report, demo_to_json(r),
                              "demo: " + r.name + "\n" + report_text(r.report));
    }

    if (*m_auto) {
      Digraph d = digraph_from_json(load_json_file(model_file));
      std::vector<Permutation> autos = automorphisms(d, opt.limit);
      json j = json::array();
      std::string text;
      for (const auto& p : autos) {
        j.push_back(p);
        text += "[";
        for (std::size_t i = 0; i < p.size(); ++i) text += (i ? " " : "") + std::to_string(p[i]);
        text += "]\n";
      }
      emit(opt, {{"automorphisms", j}, {"count", autos.size()}}, text);
      return 0;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  }
  return EXIT_USAGE;
}
