#ifndef NFSTRAT_DEMOS_HPP
#define NFSTRAT_DEMOS_HPP

#include "nfstrat/model.hpp"

namespace nfstrat {

// A curated fixture plus the comprehension instance and constraint levels it
// is checked under.
struct DemoResult {
  std::string name;
  Digraph digraph;
  FormulaPtr formula;
  std::string class_var;
  Assignment params;
  std::vector<Constraint> constraints;
  InvarianceReport report;
};

std::vector<std::string> demo_names();
DemoResult demo(const std::string& name);

}  // namespace nfstrat

#endif
