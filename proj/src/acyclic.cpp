#include "nfstrat/acyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nfstrat {

OccurrenceIndexing acyclic_index_compact(const CompactFormula& cf) {
  if (cf.atom_count() == 0) throw EmptyFormula();
  int n_atoms = cf.atom_count();
  std::vector<std::array<int, 2>> idx(n_atoms, {-1, -1});
  std::vector<int> highest(cf.var_count(), 0);  // unshared variables count as 0
  std::vector<bool> seen(cf.var_count(), false);
  std::vector<bool> done(n_atoms, false);

  auto var_at = [&](int a, int slot) { return slot == 0 ? cf.atoms[a].left : cf.atoms[a].right; };
  auto assign = [&](int a, int slot, int value) {
    idx[a][slot] = value;
    int v = var_at(a, slot);
    highest[v] = std::max(highest[v], value);
    seen[v] = true;
  };
  // Rule 1: whichever side is indexed first with n, the other side gets n+1.
  auto complete = [&](int a) {
    if (idx[a][0] >= 0 && idx[a][1] < 0) assign(a, 1, idx[a][0] + 1);
    else if (idx[a][1] >= 0 && idx[a][0] < 0) assign(a, 0, idx[a][1] + 1);
    done[a] = true;
  };
  auto next_atom = [&]() {
    int first_unindexed = -1;
    for (int a = 0; a < n_atoms; ++a) {
      if (done[a]) continue;
      if (first_unindexed < 0) first_unindexed = a;
      if (seen[cf.atoms[a].left] || seen[cf.atoms[a].right]) return a;
    }
    return first_unindexed;
  };

  assign(0, 0, 1);
  complete(0);

  for (int a; (a = next_atom()) >= 0;) {
    int lv = cf.atoms[a].left, rv = cf.atoms[a].right;
    if (!seen[lv] && !seen[rv]) {
      assign(a, 0, 1);  // fresh component
    } else if (highest[lv] >= highest[rv]) {
      // ties seed the first variable; the occurrence gets its highest index,
      // not a fresh one
      assign(a, 0, highest[lv]);
    } else {
      assign(a, 1, highest[rv]);
    }
    complete(a);
  }

  return {IndexOrigin::Acyclic, cf, std::move(idx)};
}

OccurrenceIndexing acyclic_index(const Formula& f) {
  return acyclic_index_compact(compact(f));
}

AcyclicVerdict acyclic_verdict(const Formula& f) {
  RngSummary s = rng_summary(acyclic_index(f));
  return {s.total == s.var_count, std::move(s)};
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if x and y were already connected (adding the edge closes a cycle).
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

}  // namespace

bool graph_acyclic_compact(const CompactFormula& cf) {
  Dsu dsu(cf.var_count());
  for (const AtomRow& a : cf.atoms) {
    if (a.left == a.right) return false;  // self-loop
    if (!dsu.unite(a.left, a.right)) return false;
  }
  return true;
}

bool graph_acyclic(const VarGraph& g) {
  std::map<std::string, int> id;
  for (const auto& n : g.nodes) id.emplace(n, static_cast<int>(id.size()));
  Dsu dsu(static_cast<int>(id.size()));
  for (const auto& [a, b] : g.edges) {
    if (a == b) return false;
    if (!dsu.unite(id.at(a), id.at(b))) return false;
  }
  return true;
}

std::string to_dot(const VarGraph& g) {
  std::vector<std::string> nodes = g.nodes;
  std::sort(nodes.begin(), nodes.end());
  std::string out = "graph G_phi {\n";
  for (const auto& n : nodes) out += "  \"" + n + "\";\n";
  for (const auto& [a, b] : g.edges) out += "  \"" + a + "\" -- \"" + b + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace nfstrat
