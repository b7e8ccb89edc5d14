#include "nfstrat/demos.hpp"

#include <algorithm>

namespace nfstrat {

namespace {

struct DemoSpec {
  const char* name;
  Digraph (*build)();
  const char* formula;
  const char* class_var;
  Assignment (*params)();
  std::vector<Constraint> (*constraints)(const Digraph&);
};

// Element 0 of every fixture is the empty-extension element.

Digraph build_russell() {
  // 0 = empty, 1 = {empty}; neither is a member of itself.
  return make_digraph(2, {{0, 1}}, {{0, "empty"}, {1, "{empty}"}});
}

Digraph build_chain4() {
  // Singleton chain: 1 = {0}, 2 = {1}, 3 = {2}.
  return make_digraph(4, {{0, 1}, {1, 2}, {2, 3}},
                      {{0, "empty"}, {1, "{empty}"}, {2, "{{empty}}"}, {3, "{{{empty}}}"}});
}

Digraph build_small_lattice() {
  // 0 = empty, 1 = {0}, 2 = {1}, 3 = {0,1}.
  return make_digraph(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}},
                      {{0, "empty"}, {1, "{0}"}, {2, "{1}"}, {3, "{0,1}"}});
}

Digraph build_union_fixture() {
  // 0 = empty, 1 = {0}, 2 = {0,1}, 3 = {1,2}; parameter a is element 3.
  return make_digraph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}},
                      {{0, "empty"}, {1, "{0}"}, {2, "{0,1}"}, {3, "a={1,2}"}});
}

Digraph build_relprod_fixture() {
  // u = 0 (empty), v = 1 = {u}, w = 2 = {u,v}. The pair {u,v} is w itself.
  // 3 = {v,w}, 4 = {u,w}, r = 5 = {w}, s = 6 = {3}.
  // R = {{u,v}}, S = {{v,w}}, so the relative product is K = {{u,w}} = {4}.
  return make_digraph(7,
                      {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {2, 4}, {2, 5}, {3, 6}},
                      {{0, "u"}, {1, "v"}, {2, "w={u,v}"}, {3, "{v,w}"}, {4, "{u,w}"},
                       {5, "r"}, {6, "s"}});
}

Digraph build_intersection_fixture() {
  // 0 = empty, 1 = {0}, 2 = {0,1}, 3 = {1}, 4 = {1,2}, 5 = {2}.
  return make_digraph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}},
                      {{0, "empty"}, {1, "{0}"}, {2, "{0,1}"}, {3, "{1}"}, {4, "{1,2}"},
                       {5, "{2}"}});
}

Assignment no_params() { return {}; }
Assignment param_a1() { return {{"a", 1}}; }
Assignment params_a1_b3() { return {{"a", 1}, {"b", 3}}; }
Assignment params_a3_b2() { return {{"a", 3}, {"b", 2}}; }
Assignment param_a3() { return {{"a", 3}}; }
Assignment params_r5_s6() { return {{"r", 5}, {"s", 6}}; }

std::vector<Constraint> class_level1(const Digraph&) {
  return {{"_class", std::nullopt, 1}};
}
std::vector<Constraint> class_level2(const Digraph&) {
  return {{"_class", std::nullopt, 2}};
}
std::vector<Constraint> unconstrained(const Digraph&) { return {}; }
std::vector<Constraint> union_constraints(const Digraph& d) {
  return {{"A", extension(d, 3), 1}};
}
std::vector<Constraint> relprod_constraints(const Digraph& d) {
  return {{"R", extension(d, 5), 1}, {"S", extension(d, 6), 1}, {"K", std::nullopt, 1}};
}

constexpr const char* kSingletonNotInMember =
    "ex x. ((all t:V. (t in y <-> t = x)) & ~(y in x))";

constexpr const char* kRelProd =
    "ex a. ex b. ex c. ("
    "(ex p. ((all t:V. (t in p <-> (t = a | t = b))) & p in r)) & "
    "(ex q. ((all t:V. (t in q <-> (t = b | t = c))) & q in s)) & "
    "(all t:V. (t in y <-> (t = a | t = c))))";

constexpr const char* kIntersectionPairs =
    "ex x. ex z. ((all t:V. (t in y <-> (t = x | t = z))) & (ex c. (c in x & c in z)))";

const DemoSpec kDemos[] = {
    {"russell", build_russell, "~(y in y)", "y", no_params, class_level1},
    {"lesniewski", build_chain4, kSingletonNotInMember, "y", no_params, class_level1},
    {"complement", build_small_lattice, "~(y in a)", "y", param_a1, unconstrained},
    {"boolean-union", build_small_lattice, "y in a | y in b", "y", params_a1_b3, unconstrained},
    {"sheffer", build_small_lattice, "~(y in a & y in b)", "y", params_a3_b2, unconstrained},
    {"set-union", build_union_fixture, "ex y:V. (y in a & x in y)", "x", param_a3,
     union_constraints},
    {"relative-product", build_relprod_fixture, kRelProd, "y", params_r5_s6, relprod_constraints},
    {"intersection-relation", build_intersection_fixture, kIntersectionPairs, "y", no_params,
     class_level2},
};

}  // namespace

std::vector<std::string> demo_names() {
  std::vector<std::string> out;
  for (const DemoSpec& s : kDemos) out.push_back(s.name);
  return out;
}

DemoResult demo(const std::string& name) {
  const DemoSpec* spec = nullptr;
  for (const DemoSpec& s : kDemos)
    if (name == s.name) spec = &s;
  if (!spec) throw UnknownDemo("unknown demo '" + name + "'");

  DemoResult r;
  r.name = name;
  r.digraph = spec->build();
  r.formula = parse(spec->formula);
  r.class_var = spec->class_var;
  r.params = spec->params();
  r.constraints = spec->constraints(r.digraph);
  r.report = invariance_survey(r.digraph, *r.formula, r.class_var, r.params, r.constraints);
  return r;
}

}  // namespace nfstrat
