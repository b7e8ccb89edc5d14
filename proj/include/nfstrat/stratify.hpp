#ifndef NFSTRAT_STRATIFY_HPP
#define NFSTRAT_STRATIFY_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "nfstrat/formula.hpp"

namespace nfstrat {

// Witness for stratifiability: per-variable integer types, normalized so each
// connected component's minimum type is 0.
struct TypeAssignment {
  std::map<std::string, int> types;
};

// One traversal step of a closed walk in the constraint graph. weight is +1
// when the step crosses a membership atom from element to container, -1 the
// other way, 0 for equality.
struct CycleStep {
  int atom_position;
  std::string from;
  std::string to;
  int weight;
};

// Certificate of unstratifiability: a closed walk whose weights sum to a
// nonzero value.
struct CycleWitness {
  std::vector<CycleStep> steps;
  int net_weight;
};

using StratifyResult = std::variant<TypeAssignment, CycleWitness>;

StratifyResult stratify(const Formula& f);
bool is_stratified(const Formula& f);

// Compact cores used by the corpus sweep.
bool is_stratified_compact(const CompactFormula& cf);
std::variant<std::vector<int>, CycleWitness> stratify_compact(const CompactFormula& cf);

// True iff t satisfies every atom constraint of f.
bool check_assignment(const Formula& f, const TypeAssignment& t);

}  // namespace nfstrat

#endif
