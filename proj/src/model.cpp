#include "nfstrat/model.hpp"

#include <algorithm>
#include <numeric>

namespace nfstrat {

std::vector<int> class_elements(Class c) {
  std::vector<int> out;
  for (int i = 0; c; ++i, c >>= 1)
    if (c & 1u) out.push_back(i);
  return out;
}

Class class_of(const std::vector<int>& elems) {
  Class c = 0;
  for (int e : elems) c |= Class(1) << e;
  return c;
}

Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& edges,
                     std::map<int, std::string> names) {
  Digraph d;
  d.n = n;
  d.ext.assign(n, 0);
  for (auto [y, x] : edges) {
    if (y < 0 || y >= n || x < 0 || x >= n)
      throw RangeError("edge (" + std::to_string(y) + "," + std::to_string(x) + ") out of range");
    d.ext[x] |= Class(1) << y;
  }
  d.names = std::move(names);
  return d;
}

bool is_extensional(const Digraph& d) {
  for (int a = 0; a < d.n; ++a)
    for (int b = a + 1; b < d.n; ++b)
      if (d.ext[a] == d.ext[b]) return false;
  return true;
}

Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Permutation& f) {
  std::vector<bool> hit(f.size(), false);
  for (int v : f) {
    if (v < 0 || v >= static_cast<int>(f.size()) || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Class extension(const Digraph& d, int x) {
  if (x < 0 || x >= d.n) throw RangeError("element " + std::to_string(x) + " out of range");
  return d.ext[x];
}

Class image_class(const Permutation& f, Class x) {
  Class out = 0;
  for (int y : class_elements(x)) out |= Class(1) << f[y];
  return out;
}

bool permutes(const Permutation& f, Class x) { return image_class(f, x) == x; }

JLiftResult j_lift(const Digraph& d, const Permutation& f) {
  for (int a = 0; a < d.n; ++a)
    for (int b = a + 1; b < d.n; ++b)
      if (d.ext[a] == d.ext[b]) return NonExtensional{a, b};

  Permutation g(d.n);
  for (int x = 0; x < d.n; ++x) {
    Class target = image_class(f, d.ext[x]);
    int found = -1;
    for (int z = 0; z < d.n; ++z) {
      if (d.ext[z] == target) {
        found = z;
        break;
      }
    }
    if (found < 0) return UndefinedWitness{x};
    g[x] = found;
  }
  // Extensionality plus bijectivity of image_class make g injective.
  return g;
}

bool permute_level(const Digraph& d, const Permutation& f, Class x, int level) {
  if (level <= 0) return true;
  if (!permutes(f, x)) return false;
  if (level == 1) return true;
  JLiftResult j = j_lift(d, f);
  auto* g = std::get_if<Permutation>(&j);
  return g != nullptr && permutes(*g, x);
}

namespace {

bool eval_rec(const Digraph& d, const Formula& phi, Assignment& env, const Permutation& f) {
  if (auto* a = std::get_if<Atom>(&phi.node)) {
    auto lv = env.find(a->left);
    auto rv = env.find(a->right);
    if (lv == env.end()) throw UnboundVariable("unbound variable '" + a->left + "'");
    if (rv == env.end()) throw UnboundVariable("unbound variable '" + a->right + "'");
    if (a->kind == AtomKind::Equality) return lv->second == rv->second;
    return d.has_edge(f[lv->second], rv->second);
  }
  if (auto* n = std::get_if<Not>(&phi.node)) return !eval_rec(d, *n->child, env, f);
  if (auto* q = std::get_if<Quant>(&phi.node)) {
    auto prev = env.find(q->var);
    std::optional<int> saved;
    if (prev != env.end()) saved = prev->second;
    bool result = q->kind == QuantKind::All;
    for (int v = 0; v < d.n; ++v) {
      env[q->var] = v;
      bool b = eval_rec(d, *q->body, env, f);
      if (q->kind == QuantKind::All ? !b : b) {
        result = !result;
        break;
      }
    }
    if (saved) env[q->var] = *saved;
    else env.erase(q->var);
    return result;
  }
  const auto& b = std::get<Binary>(phi.node);
  switch (b.kind) {
    case ConnKind::And:
      return eval_rec(d, *b.left, env, f) && eval_rec(d, *b.right, env, f);
    case ConnKind::Or:
      return eval_rec(d, *b.left, env, f) || eval_rec(d, *b.right, env, f);
    case ConnKind::Implies:
      return !eval_rec(d, *b.left, env, f) || eval_rec(d, *b.right, env, f);
    case ConnKind::Iff:
      return eval_rec(d, *b.left, env, f) == eval_rec(d, *b.right, env, f);
  }
  return false;
}

}  // namespace

bool eval(const Digraph& d, const Formula& phi, const Assignment& asg, const Permutation& f) {
  Assignment env = asg;
  for (auto& [var, val] : env)
    if (val < 0 || val >= d.n) throw RangeError("assignment for '" + var + "' out of range");
  return eval_rec(d, phi, env, f);
}

Class defined_class(const Digraph& d, const Formula& phi, const std::string& class_var,
                    const Assignment& params) {
  Permutation id = identity_perm(d.n);
  Class c = 0;
  Assignment env = params;
  for (int y = 0; y < d.n; ++y) {
    env[class_var] = y;
    if (eval_rec(d, phi, env, id)) c |= Class(1) << y;
  }
  return c;
}

std::optional<int> comprehension_invariant(const Digraph& d, const Formula& phi,
                                           const std::string& class_var, const Assignment& params,
                                           Class C, const Permutation& f) {
  if (C != defined_class(d, phi, class_var, params))
    throw PreconditionError("C does not match the class defined by phi");
  Assignment env = params;
  for (int y = 0; y < d.n; ++y) {
    bool expected = (C >> f[y]) & 1u;
    env[class_var] = y;
    bool got = eval_rec(d, phi, env, f);
    if (expected != got) return y;
  }
  return std::nullopt;
}

std::vector<Permutation> enumerate_permutations(const Digraph& d,
                                                const std::vector<Constraint>& constraints,
                                                int limit) {
  if (d.n > limit)
    throw SizeLimit("universe size " + std::to_string(d.n) + " exceeds permutation limit " +
                    std::to_string(limit));
  for (const Constraint& c : constraints)
    if (!c.cls)
      throw PreconditionError("unresolved constraint subset for '" + c.name + "'");
  std::vector<Permutation> out;
  Permutation p = identity_perm(d.n);
  do {
    bool ok = true;
    for (const Constraint& c : constraints) {
      if (!permute_level(d, p, *c.cls, c.level)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

InvarianceReport invariance_survey(const Digraph& d, const Formula& phi,
                                   const std::string& class_var, const Assignment& params,
                                   const std::vector<Constraint>& constraints, int limit) {
  Class C = defined_class(d, phi, class_var, params);
  std::vector<Constraint> resolved = constraints;
  InvarianceReport rep;
  for (Constraint& c : resolved) {
    if (!c.cls) c.cls = C;  // unresolved constraints refer to the defined class
    rep.levels.emplace_back(c.name, c.level);
  }

  std::vector<Permutation> perms = enumerate_permutations(d, resolved, limit);
  long total_fact = 1;
  for (int i = 2; i <= d.n; ++i) total_fact *= i;
  rep.permutations_tested = static_cast<long>(perms.size());
  rep.permutations_rejected = total_fact - rep.permutations_tested;

  Assignment env = params;
  for (const Permutation& f : perms) {
    for (int y = 0; y < d.n; ++y) {
      bool expected = (C >> f[y]) & 1u;
      env[class_var] = y;
      bool got = eval_rec(d, phi, env, f);
      if (expected != got) rep.violations.push_back({f, y, expected, got});
    }
  }
  // Enumeration order is already (perm lex, witness) sorted; keep it explicit.
  std::sort(rep.violations.begin(), rep.violations.end(), [](const Violation& a, const Violation& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.witness < b.witness;
  });

  if (rep.permutations_tested == 0) rep.verdict = Verdict::Vacuous;
  else if (rep.violations.empty()) rep.verdict = Verdict::Invariant;
  else rep.verdict = Verdict::Violated;
  return rep;
}

std::vector<Permutation> automorphisms(const Digraph& d, int limit) {
  if (d.n > limit)
    throw SizeLimit("universe size " + std::to_string(d.n) + " exceeds permutation limit " +
                    std::to_string(limit));
  std::vector<Permutation> out;
  Permutation p = identity_perm(d.n);
  do {
    bool ok = true;
    for (int x = 0; x < d.n && ok; ++x)
      if (image_class(p, d.ext[x]) != d.ext[p[x]]) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace nfstrat
