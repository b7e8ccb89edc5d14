#include "nfstrat/stratify.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace nfstrat {

namespace {

struct Edge {
  int to;
  int weight;  // level(to) - level(from) if consistent
  int atom;
};

// Builds the closed walk root -> u -> v -> root for a conflicting edge
// (u -> v, w) found during labeling.
CycleWitness make_witness(const CompactFormula& cf, const std::vector<int>& parent_var,
                          const std::vector<int>& parent_atom, const std::vector<int>& parent_weight,
                          int u, int v, int w, int conflict_atom) {
  auto path_to_root = [&](int x) {
    std::vector<int> path;  // var chain x ... root
    while (x != -1) {
      path.push_back(x);
      x = parent_var[x];
    }
    return path;
  };
  std::vector<int> pu = path_to_root(u);  // u ... root
  std::vector<int> pv = path_to_root(v);

  CycleWitness cw;
  cw.net_weight = 0;
  // root -> u, following tree edges downward.
  for (std::size_t i = pu.size(); i-- > 1;) {
    int child = pu[i - 1];
    cw.steps.push_back({parent_atom[child], cf.vars[pu[i]], cf.vars[child], parent_weight[child]});
    cw.net_weight += parent_weight[child];
  }
  // The conflicting edge u -> v.
  cw.steps.push_back({conflict_atom, cf.vars[u], cf.vars[v], w});
  cw.net_weight += w;
  // v -> root, tree edges upward (weights negate).
  for (std::size_t i = 0; i + 1 < pv.size(); ++i) {
    int child = pv[i];
    cw.steps.push_back({parent_atom[child], cf.vars[child], cf.vars[pv[i + 1]], -parent_weight[child]});
    cw.net_weight -= parent_weight[child];
  }
  return cw;
}

}  // namespace

std::variant<std::vector<int>, CycleWitness> stratify_compact(const CompactFormula& cf) {
  int n = cf.var_count();
  std::vector<std::vector<Edge>> adj(n);
  for (int i = 0; i < cf.atom_count(); ++i) {
    const AtomRow& a = cf.atoms[i];
    int w = a.kind == AtomKind::Membership ? 1 : 0;
    adj[a.left].push_back({a.right, w, i});
    adj[a.right].push_back({a.left, -w, i});
  }

  constexpr int UNSET = std::numeric_limits<int>::min();
  std::vector<int> level(n, UNSET);
  std::vector<int> parent_var(n, -1), parent_atom(n, -1), parent_weight(n, 0);
  std::vector<int> component(n, -1);

  for (int root = 0; root < n; ++root) {
    if (level[root] != UNSET) continue;
    level[root] = 0;
    component[root] = root;
    std::deque<int> q{root};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const Edge& e : adj[u]) {
        if (level[e.to] == UNSET) {
          level[e.to] = level[u] + e.weight;
          parent_var[e.to] = u;
          parent_atom[e.to] = e.atom;
          parent_weight[e.to] = e.weight;
          component[e.to] = root;
          q.push_back(e.to);
        } else if (level[e.to] != level[u] + e.weight) {
          return make_witness(cf, parent_var, parent_atom, parent_weight, u, e.to, e.weight, e.atom);
        }
      }
    }
  }

  // Normalize each component's minimum to 0.
  std::vector<int> comp_min(n, std::numeric_limits<int>::max());
  for (int v = 0; v < n; ++v) comp_min[component[v]] = std::min(comp_min[component[v]], level[v]);
  for (int v = 0; v < n; ++v) level[v] -= comp_min[component[v]];
  return level;
}

bool is_stratified_compact(const CompactFormula& cf) {
  return std::holds_alternative<std::vector<int>>(stratify_compact(cf));
}

StratifyResult stratify(const Formula& f) {
  CompactFormula cf = compact(f);
  auto res = stratify_compact(cf);
  if (auto* levels = std::get_if<std::vector<int>>(&res)) {
    TypeAssignment t;
    for (int i = 0; i < cf.var_count(); ++i) t.types[cf.vars[i]] = (*levels)[i];
    return t;
  }
  return std::get<CycleWitness>(res);
}

bool is_stratified(const Formula& f) {
  return std::holds_alternative<TypeAssignment>(stratify(f));
}

bool check_assignment(const Formula& f, const TypeAssignment& t) {
  for (const AtomOccurrence& a : atomic_sequence(f)) {
    auto l = t.types.find(a.left_occ.var);
    auto r = t.types.find(a.right_occ.var);
    if (l == t.types.end() || r == t.types.end()) return false;
    if (a.kind == AtomKind::Membership) {
      if (r->second != l->second + 1) return false;
    } else if (l->second != r->second) {
      return false;
    }
  }
  return true;
}

}  // namespace nfstrat
