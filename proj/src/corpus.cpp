#include "nfstrat/corpus.hpp"

#include "nfstrat/acyclic.hpp"
#include "nfstrat/canonical.hpp"
#include "nfstrat/stratify.hpp"

namespace nfstrat {

namespace {

const char* kVarNames[] = {"v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7"};

void rec(CompactFormula& cf, int max_atoms, int max_vars,
         const std::function<void(const CompactFormula&)>& fn) {
  if (!cf.atoms.empty()) fn(cf);
  if (cf.atom_count() == max_atoms) return;

  for (int kind = 0; kind < 2; ++kind) {
    AtomKind k = kind == 0 ? AtomKind::Membership : AtomKind::Equality;
    int used_l = cf.var_count();
    // Canonical naming: a slot may reuse any existing variable or introduce
    // exactly the next fresh one.
    for (int l = 0; l <= used_l && l < max_vars; ++l) {
      bool fresh_l = l == used_l;
      if (fresh_l) cf.vars.push_back(kVarNames[l]);
      int used_r = cf.var_count();
      for (int r = 0; r <= used_r && r < max_vars; ++r) {
        bool fresh_r = r == used_r;
        if (fresh_r) cf.vars.push_back(kVarNames[r]);
        cf.atoms.push_back({k, l, r});
        rec(cf, max_atoms, max_vars, fn);
        cf.atoms.pop_back();
        if (fresh_r) cf.vars.pop_back();
      }
      if (fresh_l) cf.vars.pop_back();
    }
  }
}

}  // namespace

void enumerate_corpus(int max_atoms, int max_vars,
                      const std::function<void(const CompactFormula&)>& fn) {
  if (max_atoms < 1 || max_vars < 1) throw SizeLimit("corpus bounds must be positive");
  CompactFormula cf;
  rec(cf, max_atoms, max_vars, fn);
}

CompareStats compare_corpus(int max_atoms, int max_vars) {
  if (max_atoms > 4 || max_vars > 4)
    throw SizeLimit("compare bounds are capped at 4 atoms and 4 variables");
  CompareStats stats;
  enumerate_corpus(max_atoms, max_vars, [&](const CompactFormula& cf) {
    ++stats.formulas;

    RngSummary canon = rng_summary(canonical_index_compact(cf));
    bool canon_stratified = canon.total == canon.var_count;
    bool oracle_stratified = is_stratified_compact(cf);
    if (canon_stratified != oracle_stratified)
      stats.canonical_disagreements.push_back(render_conjunction(cf));

    RngSummary acyc = rng_summary(acyclic_index_compact(cf));
    bool index_acyclic = acyc.total == acyc.var_count;
    bool graph_is_acyclic = graph_acyclic_compact(cf);
    if (index_acyclic != graph_is_acyclic)
      stats.acyclic_disagreements.push_back(render_conjunction(cf));

    if (index_acyclic && !oracle_stratified)
      stats.implication_violations.push_back(render_conjunction(cf));

    if (oracle_stratified) ++stats.stratified;
    if (index_acyclic) ++stats.acyclic;
  });
  return stats;
}

}  // namespace nfstrat
