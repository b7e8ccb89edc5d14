#ifndef NFSTRAT_INDEXING_HPP
#define NFSTRAT_INDEXING_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nfstrat/formula.hpp"

namespace nfstrat {

enum class IndexOrigin { Canonical, Acyclic, Arbitrary };

// An indexing pi of variable occurrences. Occurrences are addressed as
// (atom position, side); idx[a][0] is the left slot, idx[a][1] the right.
struct OccurrenceIndexing {
  IndexOrigin origin;
  CompactFormula formula;
  std::vector<std::array<int, 2>> idx;

  int at(int atom, Side s) const { return idx[atom][s == Side::Left ? 0 : 1]; }
};

// Per-variable count of distinct indices and their sum.
struct RngSummary {
  std::map<std::string, int> rng;
  int total = 0;
  int var_count = 0;
};

RngSummary rng_summary(const OccurrenceIndexing& pi);

// Flat list of indices in occurrence order (atom-major, left then right).
std::vector<int> flat_indices(const OccurrenceIndexing& pi);

}  // namespace nfstrat

#endif
