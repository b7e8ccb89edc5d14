#include "nfstrat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace nfstrat {

SyntaxError::SyntaxError(std::size_t pos, std::string what_expected, const std::string& got)
    : std::runtime_error("syntax error at position " + std::to_string(pos) + ": expected " +
                         what_expected + ", got " + got),
      position(pos),
      expected(std::move(what_expected)) {}

ReservedWordError::ReservedWordError(std::size_t pos, const std::string& word)
    : SyntaxError(pos, "variable name", "reserved word '" + word + "'") {}

FormulaPtr mk_atom(AtomKind k, std::string l, std::string r) {
  return std::make_shared<Formula>(Formula{Atom{k, std::move(l), std::move(r)}});
}
FormulaPtr mk_not(FormulaPtr c) { return std::make_shared<Formula>(Formula{Not{std::move(c)}}); }
FormulaPtr mk_binary(ConnKind k, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Binary{k, std::move(l), std::move(r)}});
}
FormulaPtr mk_quant(QuantKind k, std::string var, bool bounded, FormulaPtr body) {
  return std::make_shared<Formula>(Formula{Quant{k, std::move(var), bounded, std::move(body)}});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto* at = std::get_if<Atom>(&a.node)) {
    const auto& bt = std::get<Atom>(b.node);
    return at->kind == bt.kind && at->left == bt.left && at->right == bt.right;
  }
  if (auto* n = std::get_if<Not>(&a.node)) {
    return *n->child == *std::get<Not>(b.node).child;
  }
  if (auto* bi = std::get_if<Binary>(&a.node)) {
    const auto& bb = std::get<Binary>(b.node);
    return bi->kind == bb.kind && *bi->left == *bb.left && *bi->right == *bb.right;
  }
  const auto& qa = std::get<Quant>(a.node);
  const auto& qb = std::get<Quant>(b.node);
  return qa.kind == qb.kind && qa.var == qb.var && qa.bounded_in_V == qb.bounded_in_V &&
         *qa.body == *qb.body;
}

bool operator==(const OccRef& a, const OccRef& b) {
  return a.atom_position == b.atom_position && a.side == b.side && a.var == b.var;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

enum class Tok {
  Ident, KwAll, KwEx, KwIn, KwNot, KwAnd, KwOr, KwV,
  Eq, Amp, Pipe, Tilde, Arrow, DArrow, LParen, RParen, Dot, Colon, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      std::string w = s.substr(start, i - start);
      Tok k = Tok::Ident;
      if (w == "all") k = Tok::KwAll;
      else if (w == "ex") k = Tok::KwEx;
      else if (w == "in") k = Tok::KwIn;
      else if (w == "not") k = Tok::KwNot;
      else if (w == "and") k = Tok::KwAnd;
      else if (w == "or") k = Tok::KwOr;
      else if (w == "V") k = Tok::KwV;
      out.push_back({k, w, start});
      continue;
    }
    switch (c) {
      case '=': out.push_back({Tok::Eq, "=", start}); ++i; break;
      case '&': out.push_back({Tok::Amp, "&", start}); ++i; break;
      case '|': out.push_back({Tok::Pipe, "|", start}); ++i; break;
      case '~': out.push_back({Tok::Tilde, "~", start}); ++i; break;
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; break;
      case '.': out.push_back({Tok::Dot, ".", start}); ++i; break;
      case ':': out.push_back({Tok::Colon, ":", start}); ++i; break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
        } else {
          throw SyntaxError(start, "'->'", std::string(1, c));
        }
        break;
      case '<':
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
          out.push_back({Tok::DArrow, "<->", start});
          i += 3;
        } else {
          throw SyntaxError(start, "'<->'", std::string(1, c));
        }
        break;
      default:
        throw SyntaxError(start, "token", std::string(1, c));
    }
  }
  out.push_back({Tok::End, "<end>", s.size()});
  return out;
}

// Recursive descent, one token of lookahead.
//   formula := quant | iff
//   quant   := ("all" | "ex") VAR [":" "V"] "." formula
//   iff     := imp { "<->" imp }          left-assoc
//   imp     := disj { "->" disj }         right-assoc
//   disj    := conj { ("|" | "or") conj }
//   conj    := neg  { ("&" | "and") neg }
//   neg     := ("~" | "not") neg | atom
//   atom    := VAR ("in" | "=") VAR | "(" formula ")"
class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  FormulaPtr run() {
    FormulaPtr f = formula();
    if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "end of input", peek().text);
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  std::string var_name() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) return take().text;
    if (t.kind == Tok::KwAll || t.kind == Tok::KwEx || t.kind == Tok::KwIn ||
        t.kind == Tok::KwNot || t.kind == Tok::KwAnd || t.kind == Tok::KwOr ||
        t.kind == Tok::KwV) {
      throw ReservedWordError(t.pos, t.text);
    }
    throw SyntaxError(t.pos, "variable name", t.text);
  }

  FormulaPtr formula() {
    if (peek().kind == Tok::KwAll || peek().kind == Tok::KwEx) {
      QuantKind qk = take().kind == Tok::KwAll ? QuantKind::All : QuantKind::Exists;
      std::string v = var_name();
      bool bounded = false;
      if (peek().kind == Tok::Colon) {
        take();
        if (peek().kind != Tok::KwV) throw SyntaxError(peek().pos, "'V'", peek().text);
        take();
        bounded = true;
      }
      if (peek().kind != Tok::Dot) throw SyntaxError(peek().pos, "'.'", peek().text);
      take();
      return mk_quant(qk, std::move(v), bounded, formula());
    }
    return iff();
  }

  FormulaPtr iff() {
    FormulaPtr f = imp();
    while (peek().kind == Tok::DArrow) {
      take();
      f = mk_binary(ConnKind::Iff, std::move(f), imp());
    }
    return f;
  }

  FormulaPtr imp() {
    std::vector<FormulaPtr> parts{disj()};
    while (peek().kind == Tok::Arrow) {
      take();
      parts.push_back(disj());
    }
    FormulaPtr f = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
      f = mk_binary(ConnKind::Implies, *it, std::move(f));
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (peek().kind == Tok::Pipe || peek().kind == Tok::KwOr) {
      take();
      f = mk_binary(ConnKind::Or, std::move(f), conj());
    }
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = neg();
    while (peek().kind == Tok::Amp || peek().kind == Tok::KwAnd) {
      take();
      f = mk_binary(ConnKind::And, std::move(f), neg());
    }
    return f;
  }

  FormulaPtr neg() {
    if (peek().kind == Tok::Tilde || peek().kind == Tok::KwNot) {
      take();
      return mk_not(neg());
    }
    return atom();
  }

  FormulaPtr atom() {
    if (peek().kind == Tok::LParen) {
      take();
      FormulaPtr f = formula();
      if (peek().kind != Tok::RParen) throw SyntaxError(peek().pos, "')'", peek().text);
      take();
      return f;
    }
    std::string l = var_name();
    const Token& t = peek();
    AtomKind k;
    if (t.kind == Tok::KwIn) k = AtomKind::Membership;
    else if (t.kind == Tok::Eq) k = AtomKind::Equality;
    else throw SyntaxError(t.pos, "'in' or '='", t.text);
    take();
    return mk_atom(k, std::move(l), var_name());
  }
};

// Precedence for minimal-paren rendering. Quantifiers extend to the end of the
// formula, so they parenthesize whenever they appear as an operand.
constexpr int PREC_QUANT = 0;
constexpr int PREC_IFF = 1;
constexpr int PREC_IMP = 2;
constexpr int PREC_OR = 3;
constexpr int PREC_AND = 4;
constexpr int PREC_NEG = 5;
constexpr int PREC_ATOM = 6;

int prec_of(const Formula& f) {
  if (std::holds_alternative<Atom>(f.node)) return PREC_ATOM;
  if (std::holds_alternative<Not>(f.node)) return PREC_NEG;
  if (std::holds_alternative<Quant>(f.node)) return PREC_QUANT;
  switch (std::get<Binary>(f.node).kind) {
    case ConnKind::And: return PREC_AND;
    case ConnKind::Or: return PREC_OR;
    case ConnKind::Implies: return PREC_IMP;
    case ConnKind::Iff: return PREC_IFF;
  }
  return PREC_ATOM;
}

// Atom printer hook so the same traversal serves render() and the prefixed
// transform (which rewrites occurrences in concrete-syntax order).
using AtomPrinter = std::function<std::string(const Atom&, int atom_position)>;

void render_impl(const Formula& f, int min_prec, int& atom_counter, const AtomPrinter& print_atom,
                 std::string& out) {
  int p = prec_of(f);
  bool parens = p < min_prec;
  if (parens) out += "(";
  if (auto* a = std::get_if<Atom>(&f.node)) {
    out += print_atom(*a, atom_counter++);
  } else if (auto* n = std::get_if<Not>(&f.node)) {
    out += "~";
    render_impl(*n->child, PREC_NEG, atom_counter, print_atom, out);
  } else if (auto* q = std::get_if<Quant>(&f.node)) {
    out += (q->kind == QuantKind::All ? "all " : "ex ");
    out += q->var;
    if (q->bounded_in_V) out += ":V";
    out += ". ";
    render_impl(*q->body, PREC_QUANT, atom_counter, print_atom, out);
  } else {
    const auto& b = std::get<Binary>(f.node);
    const char* op = nullptr;
    int lmin = 0, rmin = 0;
    switch (b.kind) {
      case ConnKind::Iff: op = " <-> "; lmin = PREC_IFF; rmin = PREC_IFF + 1; break;
      case ConnKind::Implies: op = " -> "; lmin = PREC_IMP + 1; rmin = PREC_IMP; break;
      case ConnKind::Or: op = " | "; lmin = PREC_OR; rmin = PREC_OR + 1; break;
      case ConnKind::And: op = " & "; lmin = PREC_AND; rmin = PREC_AND + 1; break;
    }
    render_impl(*b.left, lmin, atom_counter, print_atom, out);
    out += op;
    render_impl(*b.right, rmin, atom_counter, print_atom, out);
  }
  if (parens) out += ")";
}

}  // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).run(); }

std::string render(const Formula& f) {
  std::string out;
  int counter = 0;
  render_impl(f, 0, counter,
              [](const Atom& a, int) {
                return a.left + (a.kind == AtomKind::Membership ? " in " : " = ") + a.right;
              },
              out);
  return out;
}

std::string render_with_atom_printer(const Formula& f, const AtomPrinter& print_atom) {
  std::string out;
  int counter = 0;
  render_impl(f, 0, counter, print_atom, out);
  return out;
}

std::vector<AtomOccurrence> atomic_sequence(const Formula& f) {
  std::vector<AtomOccurrence> out;
  // Concrete-syntax left-to-right order equals a left-first traversal.
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (auto* a = std::get_if<Atom>(&g.node)) {
      int pos = static_cast<int>(out.size());
      out.push_back({pos, a->kind,
                     OccRef{pos, Side::Left, a->left},
                     OccRef{pos, Side::Right, a->right}});
    } else if (auto* n = std::get_if<Not>(&g.node)) {
      walk(*n->child);
    } else if (auto* q = std::get_if<Quant>(&g.node)) {
      walk(*q->body);
    } else {
      const auto& b = std::get<Binary>(g.node);
      walk(*b.left);
      walk(*b.right);
    }
  };
  walk(f);
  return out;
}

int occurrence_count(const Formula& f) {
  return 2 * static_cast<int>(atomic_sequence(f).size());
}

CompactFormula compact(const Formula& f) {
  CompactFormula cf;
  std::vector<std::string>& vars = cf.vars;
  auto id_of = [&](const std::string& v) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) return static_cast<int>(i);
    vars.push_back(v);
    return static_cast<int>(vars.size() - 1);
  };
  for (const AtomOccurrence& a : atomic_sequence(f)) {
    int l = id_of(a.left_occ.var);
    int r = id_of(a.right_occ.var);
    cf.atoms.push_back({a.kind, l, r});
  }
  return cf;
}

std::string render_conjunction(const CompactFormula& cf) {
  std::string out;
  for (std::size_t i = 0; i < cf.atoms.size(); ++i) {
    if (i) out += " & ";
    const AtomRow& a = cf.atoms[i];
    out += cf.vars[a.left];
    out += a.kind == AtomKind::Membership ? " in " : " = ";
    out += cf.vars[a.right];
  }
  return out;
}

VarGraph build_var_graph(const Formula& f) {
  CompactFormula cf = compact(f);
  VarGraph g;
  g.nodes = cf.vars;
  for (const AtomRow& a : cf.atoms) g.edges.emplace_back(cf.vars[a.left], cf.vars[a.right]);
  return g;
}

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> out;
  std::vector<std::string> bound;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (auto* a = std::get_if<Atom>(&g.node)) {
      for (const std::string* v : {&a->left, &a->right}) {
        if (std::find(bound.begin(), bound.end(), *v) == bound.end() &&
            std::find(out.begin(), out.end(), *v) == out.end()) {
          out.push_back(*v);
        }
      }
    } else if (auto* n = std::get_if<Not>(&g.node)) {
      walk(*n->child);
    } else if (auto* q = std::get_if<Quant>(&g.node)) {
      bound.push_back(q->var);
      walk(*q->body);
      bound.pop_back();
    } else {
      const auto& b = std::get<Binary>(g.node);
      walk(*b.left);
      walk(*b.right);
    }
  };
  walk(f);
  return out;
}

}  // namespace nfstrat
