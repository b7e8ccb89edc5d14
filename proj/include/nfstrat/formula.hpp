#ifndef NFSTRAT_FORMULA_HPP
#define NFSTRAT_FORMULA_HPP

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace nfstrat {

// ---------------------------------------------------------------------------
// Errors

struct SyntaxError : std::runtime_error {
  std::size_t position;
  std::string expected;
  SyntaxError(std::size_t pos, std::string what_expected, const std::string& got);
};

struct ReservedWordError : SyntaxError {
  ReservedWordError(std::size_t pos, const std::string& word);
};

struct EmptyFormula : std::logic_error {
  EmptyFormula() : std::logic_error("formula has no atoms") {}
};

struct SizeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// AST

enum class AtomKind { Membership, Equality };
enum class ConnKind { And, Or, Implies, Iff };
enum class QuantKind { All, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Atom {
  AtomKind kind;
  std::string left;
  std::string right;
};

struct Not {
  FormulaPtr child;
};

struct Binary {
  ConnKind kind;
  FormulaPtr left;
  FormulaPtr right;
};

struct Quant {
  QuantKind kind;
  std::string var;
  bool bounded_in_V;
  FormulaPtr body;
};

struct Formula {
  std::variant<Atom, Not, Binary, Quant> node;
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

FormulaPtr mk_atom(AtomKind k, std::string l, std::string r);
FormulaPtr mk_not(FormulaPtr c);
FormulaPtr mk_binary(ConnKind k, FormulaPtr l, FormulaPtr r);
FormulaPtr mk_quant(QuantKind k, std::string var, bool bounded, FormulaPtr body);

// ---------------------------------------------------------------------------
// Parsing and rendering

FormulaPtr parse(const std::string& text);

// parse(render(f)) is structurally identical to f.
std::string render(const Formula& f);
inline std::string render(const FormulaPtr& f) { return render(*f); }

// Renders with a custom printer per atom; atoms are numbered in
// concrete-syntax order. Backs the prefixed j^n'f transform.
std::string render_with_atom_printer(
    const Formula& f, const std::function<std::string(const Atom&, int)>& print_atom);

// ---------------------------------------------------------------------------
// Occurrences

enum class Side { Left, Right };

struct OccRef {
  int atom_position;
  Side side;
  std::string var;
};

struct AtomOccurrence {
  int position;  // left-to-right rank in concrete syntax, from 0
  AtomKind kind;
  OccRef left_occ;
  OccRef right_occ;
};

bool operator==(const OccRef& a, const OccRef& b);

// One entry per atom, in concrete-syntax order; binders contribute nothing.
std::vector<AtomOccurrence> atomic_sequence(const Formula& f);

// |phi|: always 2 * (number of atoms).
int occurrence_count(const Formula& f);

// ---------------------------------------------------------------------------
// Compact form: atoms over small integer variable ids, in first-occurrence
// order. All indexing and stratification cores run on this.

struct AtomRow {
  AtomKind kind;
  int left;
  int right;
};

struct CompactFormula {
  std::vector<AtomRow> atoms;
  std::vector<std::string> vars;  // id -> name
  int var_count() const { return static_cast<int>(vars.size()); }
  int atom_count() const { return static_cast<int>(atoms.size()); }
  int occurrence_count() const { return 2 * atom_count(); }
};

CompactFormula compact(const Formula& f);

// Renders a compact conjunction "v0 in v1 & ...". Used for corpus reporting.
std::string render_conjunction(const CompactFormula& cf);

// ---------------------------------------------------------------------------
// Variable multigraph G_phi: one edge per atom, self-loops allowed.

struct VarGraph {
  std::vector<std::string> nodes;                          // first-occurrence order
  std::vector<std::pair<std::string, std::string>> edges;  // atom order
};

VarGraph build_var_graph(const Formula& f);

// ---------------------------------------------------------------------------
// Free variables (in first-occurrence order).
std::vector<std::string> free_variables(const Formula& f);

}  // namespace nfstrat

#endif
