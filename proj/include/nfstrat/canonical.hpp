#ifndef NFSTRAT_CANONICAL_HPP
#define NFSTRAT_CANONICAL_HPP

#include "nfstrat/indexing.hpp"

namespace nfstrat {

// Deterministic canonical indexing: the first occurrence gets |phi|, each
// membership atom steps container = element + 1, each equality atom copies,
// and unprocessed atoms are seeded from the highest index their shared
// variable has received so far.
OccurrenceIndexing canonical_index(const Formula& f);
OccurrenceIndexing canonical_index_compact(const CompactFormula& cf);

struct CanonicalVerdict {
  bool stratified;  // sum of ranges equals the variable count
  RngSummary summary;
};

CanonicalVerdict canonical_verdict(const Formula& f);

// Renders f with every occurrence `x` printed as j^n'f(x), n = pi(occurrence),
// under a 2|phi|-setlike header.
std::string phf_transform(const Formula& f, const OccurrenceIndexing& pi);

// Minimum sum of ranges over all occurrence-indexings with indices in
// [0, index_bound] that respect the per-atom rules. Guarded to <= 3 atoms.
// index_bound <= 0 means the default 2|phi|.
int minimal_rng_bruteforce(const Formula& f, int index_bound = 0);
int minimal_rng_bruteforce_compact(const CompactFormula& cf, int index_bound = 0);

}  // namespace nfstrat

#endif
