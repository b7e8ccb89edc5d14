#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nfstrat/demos.hpp"
#include "nfstrat/json_io.hpp"

using namespace nfstrat;

namespace {

bool has_violation(const InvarianceReport& rep, const Permutation& perm, int witness) {
  return std::any_of(rep.violations.begin(), rep.violations.end(),
                     [&](const Violation& v) { return v.perm == perm && v.witness == witness; });
}

}  // namespace

TEST_CASE("all fixtures are extensional with an empty element 0") {
  for (const std::string& name : demo_names()) {
    DemoResult r = demo(name);
    CAPTURE(name);
    CHECK(is_extensional(r.digraph));
    CHECK(extension(r.digraph, 0) == 0);
    CHECK(r.digraph.n <= 7);
  }
}

TEST_CASE("russell: the swap of empty and {empty} violates invariance") {
  DemoResult r = demo("russell");
  CHECK(r.report.verdict == Verdict::Violated);
  // swap {empty} <-> empty, with {empty} as the violating witness
  CHECK(has_violation(r.report, {1, 0}, 1));
}

TEST_CASE("lesniewski: the swap of {empty} and {{{empty}}} violates invariance") {
  DemoResult r = demo("lesniewski");
  CHECK(r.report.verdict == Verdict::Violated);
  Permutation swap13{0, 3, 2, 1};
  CHECK(has_violation(r.report, swap13, 3));
  // the defined class is the three singletons
  Class s = defined_class(r.digraph, *r.formula, r.class_var, r.params);
  CHECK(s == class_of({1, 2, 3}));
}

TEST_CASE("complement, boolean union and sheffer stroke hold under all permutations") {
  for (const char* name : {"complement", "boolean-union", "sheffer"}) {
    DemoResult r = demo(name);
    CAPTURE(name);
    CHECK(r.report.verdict == Verdict::Invariant);
    long fact = 1;
    for (int i = 2; i <= r.digraph.n; ++i) fact *= i;
    CHECK(r.report.permutations_tested == fact);  // genuinely all permutations
  }
}

TEST_CASE("set union holds under permutations fixing the parameter setwise") {
  DemoResult r = demo("set-union");
  CHECK(r.report.verdict == Verdict::Invariant);
  CHECK(r.report.permutations_tested > 1);
  // the defined class is the union of the parameter's members' extensions
  Class c = defined_class(r.digraph, *r.formula, r.class_var, r.params);
  CHECK(c == class_of({0, 1}));
}

TEST_CASE("relative product holds under level-1 fixing of R, S and K") {
  DemoResult r = demo("relative-product");
  CHECK(r.report.verdict == Verdict::Invariant);
  CHECK(r.report.permutations_tested > 1);
  Class k = defined_class(r.digraph, *r.formula, r.class_var, r.params);
  CHECK(k == class_of({4}));  // the pair {u,w}
}

TEST_CASE("intersection relation holds under level-2 permutations") {
  DemoResult r = demo("intersection-relation");
  CHECK(r.report.verdict == Verdict::Invariant);
  CHECK(r.report.permutations_tested >= 1);
  Class k = defined_class(r.digraph, *r.formula, r.class_var, r.params);
  CHECK(k == class_of({3, 4, 5}));
}

TEST_CASE("unknown demo name raises") {
  CHECK_THROWS_AS(demo("nonesuch"), UnknownDemo);
}

TEST_CASE("demo JSON carries the report verdict") {
  json j = demo_to_json(demo("russell"));
  CHECK(j.at("report").at("verdict") == "violated");
  CHECK(j.at("model").at("n") == 2);
  CHECK(j.contains("formula"));
}
