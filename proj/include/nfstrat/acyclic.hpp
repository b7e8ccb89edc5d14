#ifndef NFSTRAT_ACYCLIC_HPP
#define NFSTRAT_ACYCLIC_HPP

#include "nfstrat/indexing.hpp"

namespace nfstrat {

// Acyclic indexing: first occurrence gets 1, within an atom the second side
// always gets first side + 1 (no membership/equality distinction), seeds pick
// the variable with the higher highest-so-far index (unshared counts 0).
OccurrenceIndexing acyclic_index(const Formula& f);
OccurrenceIndexing acyclic_index_compact(const CompactFormula& cf);

struct AcyclicVerdict {
  bool acyclic;  // sum of ranges equals the variable count
  RngSummary summary;
};

AcyclicVerdict acyclic_verdict(const Formula& f);

// Direct oracle: true iff the variable multigraph has no cycle. Parallel
// edges and self-loops count as cycles.
bool graph_acyclic(const VarGraph& g);
bool graph_acyclic_compact(const CompactFormula& cf);

// Deterministic DOT text: nodes sorted lexicographically, edges in atom order.
std::string to_dot(const VarGraph& g);

}  // namespace nfstrat

#endif
