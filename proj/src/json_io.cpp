#include "nfstrat/json_io.hpp"

namespace nfstrat {

json ast_to_json(const Formula& f) {
  if (auto* a = std::get_if<Atom>(&f.node)) {
    return {{"op", "atom"},
            {"rel", a->kind == AtomKind::Membership ? "in" : "="},
            {"left", a->left},
            {"right", a->right}};
  }
  if (auto* n = std::get_if<Not>(&f.node)) {
    return {{"op", "not"}, {"child", ast_to_json(*n->child)}};
  }
  if (auto* q = std::get_if<Quant>(&f.node)) {
    return {{"op", q->kind == QuantKind::All ? "all" : "ex"},
            {"var", q->var},
            {"bounded", q->bounded_in_V},
            {"body", ast_to_json(*q->body)}};
  }
  const auto& b = std::get<Binary>(f.node);
  const char* op = "and";
  switch (b.kind) {
    case ConnKind::And: op = "and"; break;
    case ConnKind::Or: op = "or"; break;
    case ConnKind::Implies: op = "implies"; break;
    case ConnKind::Iff: op = "iff"; break;
  }
  return {{"op", op}, {"left", ast_to_json(*b.left)}, {"right", ast_to_json(*b.right)}};
}

json stratify_to_json(const StratifyResult& r) {
  if (auto* t = std::get_if<TypeAssignment>(&r)) {
    json types = json::object();
    for (const auto& [v, lvl] : t->types) types[v] = lvl;
    return {{"stratified", true}, {"types", types}};
  }
  const auto& cw = std::get<CycleWitness>(r);
  json cycle = json::array();
  for (const CycleStep& s : cw.steps)
    cycle.push_back(
        {{"atom", s.atom_position}, {"from", s.from}, {"to", s.to}, {"weight", s.weight}});
  return {{"stratified", false}, {"cycle", cycle}, {"net_weight", cw.net_weight}};
}

json indexing_to_json(const OccurrenceIndexing& pi, const RngSummary& s) {
  json indices = json::array();
  const CompactFormula& cf = pi.formula;
  for (int a = 0; a < cf.atom_count(); ++a) {
    indices.push_back({{"atom", a},
                       {"side", "L"},
                       {"var", cf.vars[cf.atoms[a].left]},
                       {"index", pi.idx[a][0]}});
    indices.push_back({{"atom", a},
                       {"side", "R"},
                       {"var", cf.vars[cf.atoms[a].right]},
                       {"index", pi.idx[a][1]}});
  }
  json rng = json::object();
  for (const auto& [v, r] : s.rng) rng[v] = r;
  json out = {{"indices", indices}, {"rng", rng}, {"sum", s.total}, {"vars", s.var_count}};
  if (pi.origin == IndexOrigin::Canonical) out["stratified"] = s.total == s.var_count;
  if (pi.origin == IndexOrigin::Acyclic) out["acyclic"] = s.total == s.var_count;
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Invariant: return "invariant";
    case Verdict::Violated: return "violated";
    case Verdict::Vacuous: return "vacuous";
  }
  return "vacuous";
}

json report_to_json(const InvarianceReport& r) {
  json levels = json::object();
  for (const auto& [name, lvl] : r.levels) levels[name] = lvl;
  json violations = json::array();
  for (const Violation& v : r.violations)
    violations.push_back({{"permutation", v.perm},
                          {"witness", v.witness},
                          {"expected", v.expected},
                          {"got", v.got}});
  return {{"levels", levels},
          {"permutations_tested", r.permutations_tested},
          {"permutations_rejected", r.permutations_rejected},
          {"violations", violations},
          {"verdict", verdict_name(r.verdict)}};
}

json digraph_to_json(const Digraph& d) {
  json edges = json::array();
  for (int x = 0; x < d.n; ++x)
    for (int y : class_elements(d.ext[x])) edges.push_back({y, x});
  json names = json::object();
  for (const auto& [e, name] : d.names) names[std::to_string(e)] = name;
  return {{"n", d.n}, {"edges", edges}, {"names", names}};
}

Digraph digraph_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::map<int, std::string> names;
  if (j.contains("names"))
    for (auto it = j.at("names").begin(); it != j.at("names").end(); ++it)
      names[std::stoi(it.key())] = it.value().get<std::string>();
  return make_digraph(n, edges, std::move(names));
}

ConstraintSpec constraints_from_json(const json& j) {
  ConstraintSpec spec;
  if (j.contains("bindings"))
    for (auto it = j.at("bindings").begin(); it != j.at("bindings").end(); ++it)
      spec.bindings[it.key()] = it.value().get<int>();
  std::map<std::string, Class> named;
  if (j.contains("params"))
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
      named[it.key()] = class_of(it.value().get<std::vector<int>>());
  if (j.contains("levels")) {
    for (auto it = j.at("levels").begin(); it != j.at("levels").end(); ++it) {
      Constraint c;
      c.name = it.key();
      c.level = it.value().get<int>();
      if (c.name != "_class") {
        auto found = named.find(c.name);
        if (found == named.end())
          throw PreconditionError("level for '" + c.name + "' has no matching params entry");
        c.cls = found->second;
      }
      spec.constraints.push_back(std::move(c));
    }
  }
  return spec;
}

json demo_to_json(const DemoResult& r) {
  return {{"demo", r.name},
          {"model", digraph_to_json(r.digraph)},
          {"formula", render(*r.formula)},
          {"class_var", r.class_var},
          {"params", r.params},
          {"report", report_to_json(r.report)}};
}

json compare_to_json(const CompareStats& s) {
  return {{"formulas", s.formulas},
          {"stratified", s.stratified},
          {"acyclic", s.acyclic},
          {"canonical_disagreements", s.canonical_disagreements},
          {"acyclic_disagreements", s.acyclic_disagreements},
          {"implication_violations", s.implication_violations},
          {"clean", s.clean()}};
}

}  // namespace nfstrat
