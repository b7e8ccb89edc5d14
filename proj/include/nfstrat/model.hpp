#ifndef NFSTRAT_MODEL_HPP
#define NFSTRAT_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nfstrat/formula.hpp"

namespace nfstrat {

struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownDemo : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A subset of the universe [0, n), as a bitmask.
using Class = std::uint64_t;

std::vector<int> class_elements(Class c);
Class class_of(const std::vector<int>& elems);

// Finite membership digraph: (y, x) in the relation means "y is a member of x".
struct Digraph {
  int n = 0;
  std::vector<Class> ext;  // ext[x] = members of x
  std::map<int, std::string> names;

  bool has_edge(int y, int x) const { return (ext[x] >> y) & 1u; }
  Class universe() const { return n == 64 ? ~Class(0) : (Class(1) << n) - 1; }
};

Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& edges,
                     std::map<int, std::string> names = {});

// Distinct elements have distinct extensions?
bool is_extensional(const Digraph& d);

using Permutation = std::vector<int>;

Permutation identity_perm(int n);
bool is_permutation(const Permutation& f);

// Members of x. Throws RangeError if x is out of range.
Class extension(const Digraph& d, int x);

// f``X = {f(y) : y in X}.
Class image_class(const Permutation& f, Class x);

// f restricted to X is a bijection of X onto itself.
bool permutes(const Permutation& f, Class x);

struct UndefinedWitness {
  int element;  // lowest x whose image-extension matches no element
};
struct NonExtensional {
  int a, b;  // two elements with equal extensions
};
using JLiftResult = std::variant<Permutation, UndefinedWitness, NonExtensional>;

// j`f: the map x -> the element whose extension is f``ext(x), when realized.
JLiftResult j_lift(const Digraph& d, const Permutation& f);

// Level 0: any bijection of the universe. Level 1: additionally fixes X
// setwise. Level 2: additionally j`f is defined and fixes X setwise.
bool permute_level(const Digraph& d, const Permutation& f, Class x, int level);

using Assignment = std::map<std::string, int>;

// First-order evaluation where `u in w` reads as f(u) in w and quantifiers
// range over the whole universe (the :V bound is the universe). Identity f
// gives ordinary semantics.
bool eval(const Digraph& d, const Formula& phi, const Assignment& asg, const Permutation& f);

// {y : eval(phi, params + {class_var -> y}, identity)}.
Class defined_class(const Digraph& d, const Formula& phi, const std::string& class_var,
                    const Assignment& params);

// Checks the f-membership reading of the comprehension against C (which must
// equal defined_class); returns the least violating y, or nullopt.
std::optional<int> comprehension_invariant(const Digraph& d, const Formula& phi,
                                           const std::string& class_var, const Assignment& params,
                                           Class C, const Permutation& f);

struct Constraint {
  std::string name;          // "_class" refers to the defined class
  std::optional<Class> cls;  // resolved subset; empty for "_class" until survey
  int level = 0;
};

// All permutations of [0, n) satisfying every constraint, lexicographic order.
std::vector<Permutation> enumerate_permutations(const Digraph& d,
                                                const std::vector<Constraint>& constraints,
                                                int limit = 8);

struct Violation {
  Permutation perm;
  int witness;
  bool expected;  // f(y) in C
  bool got;       // f-membership evaluation
};

enum class Verdict { Invariant, Violated, Vacuous };

struct InvarianceReport {
  std::vector<std::pair<std::string, int>> levels;
  long permutations_tested = 0;
  long permutations_rejected = 0;
  std::vector<Violation> violations;
  Verdict verdict = Verdict::Vacuous;
};

InvarianceReport invariance_survey(const Digraph& d, const Formula& phi,
                                   const std::string& class_var, const Assignment& params,
                                   const std::vector<Constraint>& constraints, int limit = 8);

// All f with (y,x) in membership iff (f(y), f(x)) in membership.
std::vector<Permutation> automorphisms(const Digraph& d, int limit = 8);

}  // namespace nfstrat

#endif
