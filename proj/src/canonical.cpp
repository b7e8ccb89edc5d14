#include "nfstrat/canonical.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace nfstrat {

namespace {

// Atom processing order: the first atom, then repeatedly the first
// unprocessed atom sharing a variable with the processed part, falling back
// to the first unprocessed atom when nothing shares (fresh component).
std::vector<int> processing_order(const CompactFormula& cf) {
  int n = cf.atom_count();
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> used(n, 0), seen(cf.var_count(), 0);
  auto take = [&](int a) {
    used[a] = 1;
    seen[cf.atoms[a].left] = seen[cf.atoms[a].right] = 1;
    order.push_back(a);
  };
  take(0);
  while (static_cast<int>(order.size()) < n) {
    int pick = -1, fallback = -1;
    for (int a = 0; a < n && pick < 0; ++a) {
      if (used[a]) continue;
      if (fallback < 0) fallback = a;
      if (seen[cf.atoms[a].left] || seen[cf.atoms[a].right]) pick = a;
    }
    take(pick >= 0 ? pick : fallback);
  }
  return order;
}

}  // namespace

OccurrenceIndexing canonical_index_compact(const CompactFormula& cf) {
  if (cf.atom_count() == 0) throw EmptyFormula();
  const int total = cf.occurrence_count();
  std::vector<int> order = processing_order(cf);

  // The greedy seed (highest index the shared variable received so far) is
  // not minimal on degenerate conjunctions with repeated variables, so we
  // search over every reuse-compatible seed per atom and keep the first
  // indexing achieving the minimal sum of ranges. The greedy branch is
  // explored first, so whenever it is minimal the result coincides with the
  // plain procedure (in particular on the worked examples).
  std::vector<std::vector<int>> vals(cf.var_count());  // distinct indices per variable
  std::vector<std::array<int, 2>> idx(cf.atom_count(), {-1, -1}), best_idx;
  int best = std::numeric_limits<int>::max(), cur = 0;

  auto has = [&](int v, int x) {
    for (int y : vals[v])
      if (y == x) return true;
    return false;
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (cur >= best) return;
    if (k == order.size()) {
      best = cur;
      best_idx = idx;
      return;
    }
    const AtomRow& row = cf.atoms[order[k]];
    int lv = row.left, rv = row.right;
    int shift = row.kind == AtomKind::Membership ? 1 : 0;

    std::vector<int> cand;
    auto push = [&](int x) {
      for (int y : cand)
        if (y == x) return;
      cand.push_back(x);
    };
    if (!vals[lv].empty()) {
      push(*std::max_element(vals[lv].begin(), vals[lv].end()));
    } else if (!vals[rv].empty()) {
      push(*std::max_element(vals[rv].begin(), vals[rv].end()) - shift);
    } else {
      push(total);  // fresh component restarts at |phi|
    }
    for (int x : vals[lv]) push(x);
    for (int x : vals[rv]) push(x - shift);

    for (int l : cand) {
      int r = l + shift;
      int added = 0;
      bool add_l = !has(lv, l);
      if (add_l) vals[lv].push_back(l), ++added;
      bool add_r = !has(rv, r);  // after l, so lv == rv is counted once
      if (add_r) vals[rv].push_back(r), ++added;
      idx[order[k]] = {l, r};
      cur += added;
      dfs(k + 1);
      cur -= added;
      if (add_r) vals[rv].pop_back();
      if (add_l) vals[lv].pop_back();
    }
  };
  dfs(0);

  return {IndexOrigin::Canonical, cf, std::move(best_idx)};
}

OccurrenceIndexing canonical_index(const Formula& f) {
  return canonical_index_compact(compact(f));
}

RngSummary rng_summary(const OccurrenceIndexing& pi) {
  const CompactFormula& cf = pi.formula;
  std::vector<std::set<int>> seen(cf.var_count());
  for (int a = 0; a < cf.atom_count(); ++a) {
    seen[cf.atoms[a].left].insert(pi.idx[a][0]);
    seen[cf.atoms[a].right].insert(pi.idx[a][1]);
  }
  RngSummary s;
  s.var_count = cf.var_count();
  for (int v = 0; v < cf.var_count(); ++v) {
    int r = static_cast<int>(seen[v].size());
    s.rng[cf.vars[v]] = r;
    s.total += r;
  }
  return s;
}

std::vector<int> flat_indices(const OccurrenceIndexing& pi) {
  std::vector<int> out;
  out.reserve(pi.idx.size() * 2);
  for (const auto& pair : pi.idx) {
    out.push_back(pair[0]);
    out.push_back(pair[1]);
  }
  return out;
}

CanonicalVerdict canonical_verdict(const Formula& f) {
  RngSummary s = rng_summary(canonical_index(f));
  return {s.total == s.var_count, std::move(s)};
}

std::string phf_transform(const Formula& f, const OccurrenceIndexing& pi) {
  int bound = 2 * pi.formula.occurrence_count();  // 2|phi|
  std::string body = render_with_atom_printer(f, [&pi](const Atom& a, int pos) {
    auto occ = [&](const std::string& v, int slot) {
      return "j^" + std::to_string(pi.idx[pos][slot]) + "'f(" + v + ")";
    };
    return occ(a.left, 0) + (a.kind == AtomKind::Membership ? " in " : " = ") + occ(a.right, 1);
  });
  return "for " + std::to_string(bound) + "-setlike f: " + body;
}

int minimal_rng_bruteforce_compact(const CompactFormula& cf, int index_bound) {
  if (cf.atom_count() == 0) throw EmptyFormula();
  if (cf.atom_count() > 3)
    throw SizeLimit("minimal_rng_bruteforce is limited to formulas with at most 3 atoms");
  int bound = index_bound > 0 ? index_bound : 2 * cf.occurrence_count();

  std::vector<std::array<int, 2>> choice(cf.atom_count());
  int best = std::numeric_limits<int>::max();

  // occurrence slots per variable, so the terminal case avoids allocations
  std::vector<std::vector<std::pair<int, int>>> occs(cf.var_count());
  for (int a = 0; a < cf.atom_count(); ++a) {
    occs[cf.atoms[a].left].emplace_back(a, 0);
    occs[cf.atoms[a].right].emplace_back(a, 1);
  }

  std::function<void(int)> rec = [&](int atom) {
    if (atom == cf.atom_count()) {
      int total = 0;
      for (const auto& var_occs : occs) {
        int vals[6], k = 0;
        for (auto [a, slot] : var_occs) {
          int v = choice[a][slot];
          bool fresh = true;
          for (int i = 0; i < k; ++i)
            if (vals[i] == v) fresh = false;
          if (fresh) vals[k++] = v;
        }
        total += k;
      }
      best = std::min(best, total);
      return;
    }
    bool mem = cf.atoms[atom].kind == AtomKind::Membership;
    int hi = mem ? bound - 1 : bound;
    for (int i = 0; i <= hi; ++i) {
      choice[atom] = {i, mem ? i + 1 : i};
      rec(atom + 1);
    }
  };
  rec(0);
  return best;
}

int minimal_rng_bruteforce(const Formula& f, int index_bound) {
  return minimal_rng_bruteforce_compact(compact(f), index_bound);
}

}  // namespace nfstrat
