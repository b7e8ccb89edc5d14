#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nfstrat/json_io.hpp"
#include "nfstrat/model.hpp"

using namespace nfstrat;

namespace {

// 0 = empty, 1 = {0}: the two-element Russell fixture.
Digraph russell_fixture() { return make_digraph(2, {{0, 1}}); }

// ext(0) = {1}, ext(1) = {0}: a two-cycle whose swap is an automorphism.
Digraph two_cycle() { return make_digraph(2, {{1, 0}, {0, 1}}); }

// 0 = empty, 1 = {0}, 2 = {1}: a rigid chain.
Digraph chain3() { return make_digraph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("extension basics") {
  Digraph d = russell_fixture();
  CHECK(class_elements(extension(d, 1)) == std::vector<int>{0});
  CHECK(extension(d, 0) == 0);  // the empty element
  CHECK_THROWS_AS(extension(d, 5), RangeError);
}

TEST_CASE("image_class and permutes") {
  Permutation id{0, 1};
  Permutation swap{1, 0};
  Class a = class_of({0});
  Class ab = class_of({0, 1});
  CHECK(image_class(id, ab) == ab);
  CHECK(image_class(swap, a) == class_of({1}));
  CHECK(image_class(swap, ab) == ab);

  CHECK(permutes(id, a));
  CHECK_FALSE(permutes(swap, a));
  CHECK(permutes(swap, ab));
}

TEST_CASE("j_lift on identity, on a missing image-extension, on an automorphism") {
  Digraph d = russell_fixture();
  auto r1 = j_lift(d, identity_perm(2));
  REQUIRE(std::holds_alternative<Permutation>(r1));
  CHECK(std::get<Permutation>(r1) == identity_perm(2));

  // swap sends ext(1)={0} to {1}, which no element realizes
  auto r2 = j_lift(d, {1, 0});
  REQUIRE(std::holds_alternative<UndefinedWitness>(r2));
  CHECK(std::get<UndefinedWitness>(r2).element == 1);

  Digraph cyc = two_cycle();
  auto r3 = j_lift(cyc, {1, 0});
  REQUIRE(std::holds_alternative<Permutation>(r3));
  CHECK(std::get<Permutation>(r3) == Permutation{1, 0});

  Digraph bad = make_digraph(2, {});  // both extensions empty
  CHECK(std::holds_alternative<NonExtensional>(j_lift(bad, identity_perm(2))));
}

TEST_CASE("permute_level") {
  Digraph d = russell_fixture();
  Permutation swap{1, 0};
  CHECK(permute_level(d, swap, class_of({0}), 0));  // level 0 always holds
  CHECK(permute_level(d, swap, class_of({0, 1}), 1));
  CHECK_FALSE(permute_level(d, swap, class_of({0, 1}), 2));  // j-lift undefined

  Digraph cyc = two_cycle();
  CHECK(permute_level(cyc, swap, cyc.universe(), 2));
}

TEST_CASE("eval with f-membership") {
  Digraph d = russell_fixture();
  FormulaPtr not_self = parse("~(y in y)");
  CHECK(eval(d, *not_self, {{"y", 1}}, identity_perm(2)));
  // under the swap, f(1)=0 and 0 is a member of 1
  CHECK_FALSE(eval(d, *not_self, {{"y", 1}}, {1, 0}));
  CHECK(eval(d, *parse("y = y"), {{"y", 0}}, {1, 0}));
  CHECK_THROWS_AS(eval(d, *not_self, {}, identity_perm(2)), UnboundVariable);
}

TEST_CASE("defined classes") {
  Digraph d = russell_fixture();
  CHECK(defined_class(d, *parse("~(y in y)"), "y", {}) == class_of({0, 1}));

  Digraph lat = make_digraph(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}});
  CHECK(defined_class(lat, *parse("~(y in a)"), "y", {{"a", 3}}) ==
        (lat.universe() & ~extension(lat, 3)));
  CHECK(defined_class(lat, *parse("y = y"), "y", {}) == lat.universe());
}

TEST_CASE("comprehension invariance and its precondition") {
  Digraph d = russell_fixture();
  FormulaPtr phi = parse("~(y in y)");
  Class r = defined_class(d, *phi, "y", {});

  CHECK(comprehension_invariant(d, *phi, "y", {}, r, identity_perm(2)) == std::nullopt);
  auto witness = comprehension_invariant(d, *phi, "y", {}, r, {1, 0});
  REQUIRE(witness.has_value());
  CHECK(*witness == 1);  // the {empty} element

  CHECK_THROWS_AS(comprehension_invariant(d, *phi, "y", {}, class_of({0}), identity_perm(2)),
                  PreconditionError);
}

TEST_CASE("permutation enumeration respects constraints") {
  Digraph d3 = chain3();
  CHECK(enumerate_permutations(d3, {}).size() == 6);

  Digraph d = russell_fixture();
  auto both = enumerate_permutations(d, {{"R", class_of({0, 1}), 1}});
  CHECK(both.size() == 2);

  auto only_id = enumerate_permutations(d, {{"X", class_of({0, 1}), 2}});
  REQUIRE(only_id.size() == 1);
  CHECK(only_id[0] == identity_perm(2));

  Digraph big = make_digraph(9, {});
  CHECK_THROWS_AS(enumerate_permutations(big, {}), SizeLimit);

  // re-checking yielded permutations never fails; count + rejected = n!
  std::vector<Constraint> cs{{"E", extension(d3, 2), 1}};
  auto perms = enumerate_permutations(d3, cs);
  for (const auto& p : perms) CHECK(permute_level(d3, p, extension(d3, 2), 1));
  CHECK(perms.size() == 2);  // fix {1} setwise: permutations fixing element 1
}

TEST_CASE("invariance survey aggregates all violations deterministically") {
  Digraph d = russell_fixture();
  InvarianceReport rep =
      invariance_survey(d, *parse("~(y in y)"), "y", {}, {{"_class", std::nullopt, 1}});
  CHECK(rep.verdict == Verdict::Violated);
  CHECK(rep.permutations_tested == 2);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].perm == Permutation{1, 0});
  CHECK(rep.violations[0].witness == 1);

  InvarianceReport inv = invariance_survey(d, *parse("y = y"), "y", {}, {});
  CHECK(inv.verdict == Verdict::Invariant);
  CHECK(inv.permutations_tested == 2);
}

TEST_CASE("automorphism search") {
  auto rigid = automorphisms(chain3());
  REQUIRE(rigid.size() == 1);
  CHECK(rigid[0] == identity_perm(3));

  auto cyc = automorphisms(two_cycle());
  CHECK(cyc.size() == 2);

  auto empty = automorphisms(make_digraph(2, {}));
  CHECK(empty.size() == 2);
}

TEST_CASE("automorphisms of extensional digraphs equal their own j-lift") {
  for (Digraph d : {chain3(), two_cycle(), make_digraph(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}})}) {
    REQUIRE(is_extensional(d));
    for (const Permutation& f : automorphisms(d)) {
      auto j = j_lift(d, f);
      REQUIRE(std::holds_alternative<Permutation>(j));
      CHECK(std::get<Permutation>(j) == f);
      CHECK(permute_level(d, f, d.universe(), 2));
    }
  }
}

TEST_CASE("model JSON round-trip and constraint spec parsing") {
  Digraph d = make_digraph(3, {{0, 1}, {1, 2}}, {{0, "empty"}});
  json j = digraph_to_json(d);
  Digraph back = digraph_from_json(j);
  CHECK(back.n == d.n);
  CHECK(back.ext == d.ext);
  CHECK(back.names == d.names);

  json cj = {{"bindings", {{"a", 2}}},
             {"params", {{"A", {0, 1}}}},
             {"levels", {{"A", 1}, {"_class", 2}}}};
  ConstraintSpec spec = constraints_from_json(cj);
  CHECK(spec.bindings == Assignment{{"a", 2}});
  REQUIRE(spec.constraints.size() == 2);
  CHECK_THROWS_AS(constraints_from_json(json{{"levels", {{"B", 1}}}}), PreconditionError);
}
