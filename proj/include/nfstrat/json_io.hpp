#ifndef NFSTRAT_JSON_IO_HPP
#define NFSTRAT_JSON_IO_HPP

#include <json.hpp>

#include "nfstrat/acyclic.hpp"
#include "nfstrat/canonical.hpp"
#include "nfstrat/corpus.hpp"
#include "nfstrat/demos.hpp"
#include "nfstrat/model.hpp"
#include "nfstrat/stratify.hpp"

namespace nfstrat {

using json = nlohmann::json;

// Tagged AST export: {"op": "atom"|"not"|"and"|"or"|"implies"|"iff"|"all"|"ex", ...}.
json ast_to_json(const Formula& f);

json stratify_to_json(const StratifyResult& r);

// {"indices": [...], "rng": {...}, "sum": n, "vars": n, "stratified"/"acyclic": b}
json indexing_to_json(const OccurrenceIndexing& pi, const RngSummary& s);

json report_to_json(const InvarianceReport& r);
json demo_to_json(const DemoResult& r);
json compare_to_json(const CompareStats& s);

json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const json& j);

// Constraint file: {"bindings": {var: element}, "params": {name: [elements]},
// "levels": {name-or-"_class": level}}.
struct ConstraintSpec {
  Assignment bindings;
  std::vector<Constraint> constraints;
};
ConstraintSpec constraints_from_json(const json& j);

const char* verdict_name(Verdict v);

}  // namespace nfstrat

#endif
