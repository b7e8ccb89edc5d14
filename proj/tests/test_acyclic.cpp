#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nfstrat/acyclic.hpp"
#include "nfstrat/corpus.hpp"
#include "nfstrat/stratify.hpp"

using namespace nfstrat;

TEST_CASE("square formula reproduces the worked acyclic indexing") {
  OccurrenceIndexing pi = acyclic_index(*parse("x in y & z in y & k in x & k in z"));
  CHECK(flat_indices(pi) == std::vector<int>{1, 2, 3, 2, 2, 1, 4, 3});

  RngSummary s = rng_summary(pi);
  CHECK(s.rng == std::map<std::string, int>{{"x", 1}, {"y", 1}, {"z", 1}, {"k", 2}});
  CHECK(s.total == 5);
  CHECK(s.var_count == 4);
}

TEST_CASE("single atom and two-atom path") {
  CHECK(flat_indices(acyclic_index(*parse("x in y"))) == std::vector<int>{1, 2});
  CHECK(flat_indices(acyclic_index(*parse("x in y & y in z"))) == std::vector<int>{1, 2, 2, 3});
}

TEST_CASE("verdicts: square is stratified but not acyclic") {
  FormulaPtr square = parse("x in y & z in y & k in x & k in z");
  AcyclicVerdict v = acyclic_verdict(*square);
  CHECK_FALSE(v.acyclic);
  CHECK(v.summary.total == 5);
  CHECK(v.summary.var_count == 4);
  CHECK(is_stratified(*square));  // regression pin

  CHECK(acyclic_verdict(*parse("x in y & y in z")).acyclic);
  CHECK_FALSE(acyclic_verdict(*parse("x in x")).acyclic);
}

TEST_CASE("graph oracle handles self-loops and parallel edges") {
  CHECK_FALSE(graph_acyclic(build_var_graph(*parse("x in y & z in y & k in x & k in z"))));
  CHECK(graph_acyclic(build_var_graph(*parse("x in y"))));
  CHECK_FALSE(graph_acyclic(build_var_graph(*parse("x in y & x in y"))));
  CHECK_FALSE(graph_acyclic(build_var_graph(*parse("x = x"))));
  CHECK(graph_acyclic(build_var_graph(*parse("x in y & z in k"))));
}

TEST_CASE("dot output is deterministic with sorted nodes and atom-ordered edges") {
  std::string dot = to_dot(build_var_graph(*parse("z in y & x in y")));
  CHECK(dot ==
        "graph G_phi {\n"
        "  \"x\";\n"
        "  \"y\";\n"
        "  \"z\";\n"
        "  \"z\" -- \"y\";\n"
        "  \"x\" -- \"y\";\n"
        "}\n");
}

TEST_CASE("indexing verdict equals the graph oracle over the small corpus") {
  enumerate_corpus(3, 4, [](const CompactFormula& cf) {
    CAPTURE(render_conjunction(cf));
    OccurrenceIndexing pi = acyclic_index_compact(cf);
    RngSummary s = rng_summary(pi);
    REQUIRE((s.total == s.var_count) == graph_acyclic_compact(cf));
    // acyclic implies stratified
    if (s.total == s.var_count) REQUIRE(is_stratified_compact(cf));
    // deterministic
    REQUIRE(acyclic_index_compact(cf).idx == pi.idx);
  });
}
