#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nfstrat/canonical.hpp"
#include "nfstrat/corpus.hpp"
#include "nfstrat/stratify.hpp"

using namespace nfstrat;

TEST_CASE("triangle formula reproduces the worked indexing") {
  OccurrenceIndexing pi = canonical_index(*parse("x in y & y in z & z in x"));
  CHECK(flat_indices(pi) == std::vector<int>{6, 7, 7, 8, 8, 9});

  RngSummary s = rng_summary(pi);
  CHECK(s.rng == std::map<std::string, int>{{"x", 2}, {"y", 1}, {"z", 1}});
  CHECK(s.total == 4);
  CHECK(s.var_count == 3);
}

TEST_CASE("equality copies the seed index") {
  OccurrenceIndexing pi = canonical_index(*parse("x = x"));
  CHECK(flat_indices(pi) == std::vector<int>{2, 2});
  RngSummary s = rng_summary(pi);
  CHECK(s.rng == std::map<std::string, int>{{"x", 1}});
  CHECK(s.total == 1);
  CHECK(s.var_count == 1);
}

TEST_CASE("mixed membership and equality with backward propagation") {
  // Hand-executed: atom 0 gives x=6,y=7; atom 1 shares y, seeds its second
  // variable y with 7 and steps the element z back to 6; atom 2 copies x=6.
  OccurrenceIndexing pi = canonical_index(*parse("x in y & z in y & x = z"));
  CHECK(flat_indices(pi) == std::vector<int>{6, 7, 6, 7, 6, 6});
  RngSummary s = rng_summary(pi);
  CHECK(s.total == 3);
  CHECK(s.var_count == 3);
  CHECK(is_stratified(*parse("x in y & z in y & x = z")));  // oracle agreement
}

TEST_CASE("verdicts for the three reference formulas") {
  CHECK_FALSE(canonical_verdict(*parse("x in y & y in z & z in x")).stratified);
  CHECK(canonical_verdict(*parse("x in y")).stratified);
  CHECK(canonical_verdict(*parse("x in y & z in y & x = z")).stratified);
}

TEST_CASE("sharing-first atom selection skips unrelated atoms") {
  // Atom 2 shares x with atom 0 and must be indexed before atom 1.
  OccurrenceIndexing pi = canonical_index(*parse("x in y & z in w & x = w"));
  RngSummary s = rng_summary(pi);
  CHECK(s.total == s.var_count);  // stratified, so all ranges are 1
  CHECK(is_stratified(*parse("x in y & z in w & x = w")));
}

TEST_CASE("prefixed transform carries the setlike bound") {
  FormulaPtr f = parse("x in y & y in z & z in x");
  std::string t = phf_transform(*f, canonical_index(*f));
  CHECK(t.find("12-setlike") != std::string::npos);
  CHECK(t.find("j^6'f(x) in j^7'f(y)") != std::string::npos);
  CHECK(t.find("j^7'f(y) in j^8'f(z)") != std::string::npos);
  CHECK(t.find("j^8'f(z) in j^9'f(x)") != std::string::npos);

  FormulaPtr g = parse("x in y");
  std::string tg = phf_transform(*g, canonical_index(*g));
  CHECK(tg.find("j^2'f(x) in j^3'f(y)") != std::string::npos);
  CHECK(tg.find("4-setlike") != std::string::npos);

  FormulaPtr h = parse("x = x");
  CHECK(phf_transform(*h, canonical_index(*h)).find("j^2'f(x) = j^2'f(x)") != std::string::npos);
}

TEST_CASE("brute-force minimum on the reference formulas") {
  CHECK(minimal_rng_bruteforce(*parse("x in y & y in z & z in x")) == 4);
  CHECK(minimal_rng_bruteforce(*parse("x in y")) == 2);
  CHECK(minimal_rng_bruteforce(*parse("x in y & z in y & x = z")) == 3);
  CHECK_THROWS_AS(minimal_rng_bruteforce(*parse("a in b & b in c & c in d & d in a")), SizeLimit);
}

TEST_CASE("rule conformance, bounds, determinism and minimality over the small corpus") {
  enumerate_corpus(3, 4, [](const CompactFormula& cf) {
    CAPTURE(render_conjunction(cf));
    OccurrenceIndexing pi = canonical_index_compact(cf);

    // rules 2-3 per atom
    for (int a = 0; a < cf.atom_count(); ++a) {
      if (cf.atoms[a].kind == AtomKind::Membership) REQUIRE(pi.idx[a][1] == pi.idx[a][0] + 1);
      else REQUIRE(pi.idx[a][1] == pi.idx[a][0]);
    }
    // indices within [1, 2|phi|-1]
    int occ = cf.occurrence_count();
    for (int v : flat_indices(pi)) {
      REQUIRE(v >= 1);
      REQUIRE(v <= 2 * occ - 1);
    }
    // deterministic
    REQUIRE(canonical_index_compact(cf).idx == pi.idx);

    RngSummary s = rng_summary(pi);
    REQUIRE(s.total >= s.var_count);
    // greedy result achieves the brute-force minimum
    REQUIRE(s.total == minimal_rng_bruteforce_compact(cf));
    // criterion equivalence against the independent oracle
    REQUIRE((s.total == s.var_count) == is_stratified_compact(cf));
  });
}
