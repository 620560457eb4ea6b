#include "ifol/syntax.hpp"

#include <algorithm>

namespace ifol {

// --- PR bodies --------------------------------------------------------------

PRBodyPtr pr_zero(int arity) {
  auto b = std::make_shared<PRBody>();
  b->kind = PRBody::Kind::Zero;
  b->arity = arity;
  return b;
}

PRBodyPtr pr_succ() {
  auto b = std::make_shared<PRBody>();
  b->kind = PRBody::Kind::Succ;
  b->arity = 1;
  return b;
}

PRBodyPtr pr_proj(int arity, int index) {
  if (index < 0 || index >= arity) throw std::invalid_argument("pr_proj: index out of range");
  auto b = std::make_shared<PRBody>();
  b->kind = PRBody::Kind::Proj;
  b->arity = arity;
  b->index = index;
  return b;
}

PRBodyPtr pr_named(const std::string& name) {
  auto b = std::make_shared<PRBody>();
  b->kind = PRBody::Kind::Named;
  b->name = name;
  return b;
}

PRBodyPtr pr_compose(PRBodyPtr outer, std::vector<PRBodyPtr> inners) {
  auto b = std::make_shared<PRBody>();
  b->kind = PRBody::Kind::Compose;
  b->outer = std::move(outer);
  b->inners = std::move(inners);
  return b;
}

PRBodyPtr pr_primrec(PRBodyPtr base, PRBodyPtr step) {
  auto b = std::make_shared<PRBody>();
  b->kind = PRBody::Kind::PrimRec;
  b->outer = std::move(base);
  b->inners = {std::move(step)};
  return b;
}

// --- Signature --------------------------------------------------------------

std::optional<int> Signature::predicate_arity(const std::string& name) const {
  for (const auto& [n, a] : predicates)
    if (n == name) return a;
  return std::nullopt;
}

std::optional<int> Signature::function_arity(const std::string& name) const {
  for (const auto& [n, a] : functions)
    if (n == name) return a;
  for (const auto& d : prFunctions)
    if (d.name == name) return d.arity;
  return std::nullopt;
}

const PRDefinition* Signature::pr_definition(const std::string& name) const {
  for (const auto& d : prFunctions)
    if (d.name == name) return &d;
  return nullptr;
}

bool Signature::knows(const std::string& name) const {
  return predicate_arity(name).has_value() || function_arity(name).has_value();
}

void Signature::add_predicate(const std::string& name, int arity) {
  if (knows(name)) throw std::invalid_argument("duplicate symbol: " + name);
  if (arity < 0) throw std::invalid_argument("negative arity: " + name);
  predicates.emplace_back(name, arity);
}

void Signature::add_function(const std::string& name, int arity) {
  if (knows(name)) throw std::invalid_argument("duplicate symbol: " + name);
  if (arity < 0) throw std::invalid_argument("negative arity: " + name);
  functions.emplace_back(name, arity);
}

void Signature::add_pr(PRDefinition def) {
  if (knows(def.name)) throw std::invalid_argument("duplicate symbol: " + def.name);
  // Named sub-bodies must already be declared; PrimRec only at top level.
  std::function<void(const PRBodyPtr&, bool)> check = [&](const PRBodyPtr& b, bool top) {
    if (!b) throw std::invalid_argument("null PR body in " + def.name);
    switch (b->kind) {
      case PRBody::Kind::Zero:
      case PRBody::Kind::Succ:
      case PRBody::Kind::Proj:
        break;
      case PRBody::Kind::Named:
        if (!function_arity(b->name))
          throw std::invalid_argument("PR body of " + def.name +
                                      " refers to undeclared " + b->name);
        break;
      case PRBody::Kind::Compose:
        check(b->outer, false);
        for (const auto& i : b->inners) check(i, false);
        break;
      case PRBody::Kind::PrimRec:
        if (!top)
          throw std::invalid_argument("nested primitive recursion in " + def.name +
                                      "; name the inner function first");
        check(b->outer, false);
        check(b->inners.at(0), false);
        break;
    }
  };
  check(def.body, true);
  prFunctions.push_back(std::move(def));
}

namespace {

// Standard PR prelude built strictly from the schemata:
//   pred(0)=0, pred(Sn)=n
//   sg(0)=0, sg(Sn)=S(0)
//   monusRev(0,x)=x, monusRev(Sn,x)=pred(monusRev(n,x))   (recursion on 1st arg)
//   monus(x,y)=monusRev(y,x)
//   absdiff(x,y)=monus(x,y)+monus(y,x)
//   max(x,y)=x+monus(y,x)
void add_pr_prelude(Signature& sig) {
  sig.add_pr({"pred", 1, pr_primrec(pr_zero(0), pr_proj(2, 0))});
  sig.add_pr({"sg", 1, pr_primrec(pr_zero(0), pr_compose(pr_succ(), {pr_zero(2)}))});
  sig.add_pr({"monusRev", 2,
              pr_primrec(pr_proj(1, 0),
                         pr_compose(pr_named("pred"), {pr_proj(3, 1)}))});
  sig.add_pr({"monus", 2,
              pr_compose(pr_named("monusRev"), {pr_proj(2, 1), pr_proj(2, 0)})});
  sig.add_pr({"absdiff", 2,
              pr_compose(pr_named("+"),
                         {pr_named("monus"),
                          pr_compose(pr_named("monus"), {pr_proj(2, 1), pr_proj(2, 0)})})});
  sig.add_pr({"max", 2,
              pr_compose(pr_named("+"),
                         {pr_proj(2, 0),
                          pr_compose(pr_named("monus"), {pr_proj(2, 1), pr_proj(2, 0)})})});
}

}  // namespace

Signature arithmetic_signature() {
  Signature sig;
  sig.arithmetic = true;
  sig.add_function("0", 0);
  sig.add_function("S", 1);
  sig.add_function("+", 2);
  sig.add_function("*", 2);
  add_pr_prelude(sig);
  // Delegated symbols; evaluation is wired in stdmodel.cpp.
  sig.add_function(builtin::kJ1, 1);
  sig.add_function(builtin::kJ2, 1);
  sig.add_function(builtin::kU, 1);
  sig.add_function(builtin::kDec, 2);
  sig.add_function(builtin::kWitSubst, 2);
  sig.add_predicate(builtin::kT, 3);
  sig.add_predicate(builtin::kIsExSent, 1);
  sig.add_predicate(builtin::kPrfQ, 2);
  sig.add_predicate(builtin::kPrfIPRA, 2);
  sig.add_predicate(builtin::kPrfHA, 2);
  sig.add_predicate(builtin::kPrfHAECT, 2);
  return sig;
}

// --- Terms ------------------------------------------------------------------

TermPtr var(const std::string& name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Variable;
  t->name = name;
  return t;
}

TermPtr apply(const std::string& fn, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Apply;
  t->name = fn;
  t->args = std::move(args);
  return t;
}

TermPtr zero() { return apply("0"); }
TermPtr succ(TermPtr t) { return apply("S", {std::move(t)}); }

TermPtr numeral(const Nat& n) {
  if (n < 0) throw std::invalid_argument("numeral of negative value");
  TermPtr t = zero();
  for (Nat i = 0; i < n; ++i) t = succ(t);
  return t;
}

std::optional<Nat> numeral_value(const TermPtr& t) {
  Nat n = 0;
  const Term* cur = t.get();
  while (true) {
    if (cur->kind != Term::Kind::Apply) return std::nullopt;
    if (cur->name == "0" && cur->args.empty()) return n;
    if (cur->name == "S" && cur->args.size() == 1) {
      ++n;
      cur = cur->args[0].get();
      continue;
    }
    return std::nullopt;
  }
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  if (a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_eq(a->args[i], b->args[i])) return false;
  return true;
}

void term_free_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == Term::Kind::Variable) {
    out.insert(t->name);
    return;
  }
  for (const auto& a : t->args) term_free_vars(a, out);
}

// --- Formulas ---------------------------------------------------------------

namespace fb {

static FormulaPtr mk(Formula::Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

FormulaPtr top() { return mk(Formula::Kind::Top); }
FormulaPtr bottom() { return mk(Formula::Kind::Bottom); }

FormulaPtr eq(TermPtr a, TermPtr b) {
  auto f = mk(Formula::Kind::AtomEq);
  f->terms = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr pred(const std::string& name, std::vector<TermPtr> args) {
  auto f = mk(Formula::Kind::AtomPred);
  f->name = name;
  f->terms = std::move(args);
  return f;
}

FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  auto f = mk(Formula::Kind::And);
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  auto f = mk(Formula::Kind::Or);
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  auto f = mk(Formula::Kind::Implies);
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FormulaPtr neg(FormulaPtr a) {
  auto f = mk(Formula::Kind::Not);
  f->left = std::move(a);
  return f;
}

FormulaPtr forall(const std::string& v, FormulaPtr body) {
  auto f = mk(Formula::Kind::Forall);
  f->name = v;
  f->left = std::move(body);
  return f;
}

FormulaPtr exists(const std::string& v, FormulaPtr body) {
  auto f = mk(Formula::Kind::Exists);
  f->name = v;
  f->left = std::move(body);
  return f;
}

}  // namespace fb

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  if (a->terms.size() != b->terms.size()) return false;
  for (size_t i = 0; i < a->terms.size(); ++i)
    if (!term_eq(a->terms[i], b->terms[i])) return false;
  if (!!a->left != !!b->left || !!a->right != !!b->right) return false;
  if (a->left && !formula_eq(a->left, b->left)) return false;
  if (a->right && !formula_eq(a->right, b->right)) return false;
  return true;
}

namespace {

size_t hash_mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t term_hash(const TermPtr& t) {
  size_t h = static_cast<size_t>(t->kind);
  h = hash_mix(h, std::hash<std::string>{}(t->name));
  for (const auto& a : t->args) h = hash_mix(h, term_hash(a));
  return h;
}

using Renaming = std::vector<std::pair<std::string, std::string>>;

const std::string* renamed(const Renaming& r, const std::string& v) {
  for (auto it = r.rbegin(); it != r.rend(); ++it)
    if (it->first == v) return &it->second;
  return nullptr;
}

bool term_alpha_eq(const TermPtr& a, const TermPtr& b, const Renaming& ra,
                   const Renaming& rb) {
  if (a->kind != b->kind) return false;
  if (a->kind == Term::Kind::Variable) {
    const std::string* ma = renamed(ra, a->name);
    const std::string* mb = renamed(rb, b->name);
    if (!!ma != !!mb) return false;
    return ma ? *ma == *mb : a->name == b->name;
  }
  if (a->name != b->name || a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_alpha_eq(a->args[i], b->args[i], ra, rb)) return false;
  return true;
}

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b, Renaming& ra, Renaming& rb,
              int& fresh) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::AtomEq:
    case Formula::Kind::AtomPred:
      if (a->name != b->name || a->terms.size() != b->terms.size()) return false;
      for (size_t i = 0; i < a->terms.size(); ++i)
        if (!term_alpha_eq(a->terms[i], b->terms[i], ra, rb)) return false;
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alpha_eq(a->left, b->left, ra, rb, fresh) &&
             alpha_eq(a->right, b->right, ra, rb, fresh);
    case Formula::Kind::Not:
      return alpha_eq(a->left, b->left, ra, rb, fresh);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string canon = "#" + std::to_string(fresh++);
      ra.emplace_back(a->name, canon);
      rb.emplace_back(b->name, canon);
      bool ok = alpha_eq(a->left, b->left, ra, rb, fresh);
      ra.pop_back();
      rb.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equivalent(const FormulaPtr& a, const FormulaPtr& b) {
  Renaming ra, rb;
  int fresh = 0;
  return alpha_eq(a, b, ra, rb, fresh);
}

size_t formula_hash(const FormulaPtr& f) {
  size_t h = static_cast<size_t>(f->kind) + 17;
  h = hash_mix(h, std::hash<std::string>{}(f->name));
  for (const auto& t : f->terms) h = hash_mix(h, term_hash(t));
  if (f->left) h = hash_mix(h, formula_hash(f->left));
  if (f->right) h = hash_mix(h, formula_hash(f->right));
  return h;
}

namespace {

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::AtomEq:
    case Formula::Kind::AtomPred: {
      std::set<std::string> vs;
      for (const auto& t : f->terms) term_free_vars(t, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_free(f->left, bound, out);
      collect_free(f->right, bound, out);
      return;
    case Formula::Kind::Not:
      collect_free(f->left, bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool wasBound = bound.count(f->name) > 0;
      bound.insert(f->name);
      collect_free(f->left, bound, out);
      if (!wasBound) bound.erase(f->name);
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_sentence(const FormulaPtr& f) { return free_vars(f).empty(); }

bool is_atomic(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
    case Formula::Kind::AtomEq:
    case Formula::Kind::AtomPred:
      return true;
    default:
      return false;
  }
}

// --- Substitution -----------------------------------------------------------

TermPtr substitute_term(const TermPtr& t, const std::string& v, const TermPtr& r) {
  if (t->kind == Term::Kind::Variable) return t->name == v ? r : t;
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) {
    TermPtr s = substitute_term(a, v, r);
    changed = changed || s.get() != a.get();
    args.push_back(std::move(s));
  }
  return changed ? apply(t->name, std::move(args)) : t;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string candidate = base;
  while (avoid.count(candidate)) candidate += "'";
  return candidate;
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& t) {
  switch (f->kind) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
      return f;
    case Formula::Kind::AtomEq:
    case Formula::Kind::AtomPred: {
      bool changed = false;
      std::vector<TermPtr> terms;
      terms.reserve(f->terms.size());
      for (const auto& a : f->terms) {
        TermPtr s = substitute_term(a, v, t);
        changed = changed || s.get() != a.get();
        terms.push_back(std::move(s));
      }
      if (!changed) return f;
      auto g = std::make_shared<Formula>(*f);
      g->terms = std::move(terms);
      return g;
    }
    case Formula::Kind::And:
      return fb::conj(substitute(f->left, v, t), substitute(f->right, v, t));
    case Formula::Kind::Or:
      return fb::disj(substitute(f->left, v, t), substitute(f->right, v, t));
    case Formula::Kind::Implies:
      return fb::implies(substitute(f->left, v, t), substitute(f->right, v, t));
    case Formula::Kind::Not:
      return fb::neg(substitute(f->left, v, t));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f->name == v) return f;  // v is bound here
      std::set<std::string> tvars;
      term_free_vars(t, tvars);
      FormulaPtr body = f->left;
      std::string binder = f->name;
      if (tvars.count(binder) && free_vars(body).count(v)) {
        // Capture: rename the binder first.
        std::set<std::string> avoid = free_vars(body);
        avoid.insert(tvars.begin(), tvars.end());
        avoid.insert(v);
        std::string renamedVar = fresh_name(binder, avoid);
        body = substitute(body, binder, var(renamedVar));
        binder = renamedVar;
      }
      FormulaPtr newBody = substitute(body, v, t);
      return f->kind == Formula::Kind::Forall ? fb::forall(binder, newBody)
                                              : fb::exists(binder, newBody);
    }
  }
  throw std::logic_error("substitute: unreachable");
}

}  // namespace ifol
