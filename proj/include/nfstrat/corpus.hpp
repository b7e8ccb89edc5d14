#ifndef NFSTRAT_CORPUS_HPP
#define NFSTRAT_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nfstrat/formula.hpp"

namespace nfstrat {

// Enumerates every conjunction of 1..max_atoms atoms over at most max_vars
// variables, duplicates allowed, with variable names canonicalized to
// v0..vk in first-occurrence order (alpha-variants appear once).
void enumerate_corpus(int max_atoms, int max_vars,
                      const std::function<void(const CompactFormula&)>& fn);

struct CompareStats {
  std::uint64_t formulas = 0;
  std::uint64_t stratified = 0;
  std::uint64_t acyclic = 0;
  // Each entry is the rendered formula. Non-empty lists are findings against
  // the indexing criteria.
  std::vector<std::string> canonical_disagreements;
  std::vector<std::string> acyclic_disagreements;
  std::vector<std::string> implication_violations;  // acyclic but not stratified

  bool clean() const {
    return canonical_disagreements.empty() && acyclic_disagreements.empty() &&
           implication_violations.empty();
  }
};

// Cross-validates canonical indexing against the stratification oracle and
// acyclic indexing against the graph oracle, and checks acyclic => stratified.
// Bounds above (4, 4) are rejected.
CompareStats compare_corpus(int max_atoms, int max_vars);

}  // namespace nfstrat

#endif
