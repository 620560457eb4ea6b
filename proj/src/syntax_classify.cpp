#include <algorithm>

#include "ifol/syntax.hpp"

namespace ifol {

namespace {

bool quantifier_free(const Formula* f) {
  switch (f->kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return false;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return quantifier_free(f->left.get()) && quantifier_free(f->right.get());
    case Formula::Kind::Not:
      return quantifier_free(f->left.get());
    default:
      return true;
  }
}
bool quantifier_free(const FormulaPtr& f) { return quantifier_free(f.get()); }

// No \/ anywhere; every exists is immediately in front of an atomic formula.
bool almost_negative(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Or:
      return false;
    case Formula::Kind::Exists:
      return is_atomic(f->left);
    case Formula::Kind::Forall:
    case Formula::Kind::Not:
      return almost_negative(f->left);
    case Formula::Kind::And:
    case Formula::Kind::Implies:
      return almost_negative(f->left) && almost_negative(f->right);
    default:
      return true;
  }
}

const Formula* strip_prefix(const FormulaPtr& f, Formula::Kind q) {
  const Formula* cur = f.get();
  while (cur->kind == q) cur = cur->left.get();
  return cur;
}

}  // namespace

FormulaClass classify(const FormulaPtr& f) {
  FormulaClass c;
  c.isAtomic = is_atomic(f);
  c.isQuantifierFree = quantifier_free(f);
  c.isAlmostNegative = almost_negative(f);

  c.isSigma1 = quantifier_free(strip_prefix(f, Formula::Kind::Exists));
  const Formula* afterForall = strip_prefix(f, Formula::Kind::Forall);
  c.isPi1 = quantifier_free(afterForall);
  const Formula* afterBoth = afterForall;
  while (afterBoth->kind == Formula::Kind::Exists) afterBoth = afterBoth->left.get();
  c.isPi2 = quantifier_free(afterBoth);
  return c;
}

namespace {

std::vector<std::string> sorted_free_vars_excluding(
    const std::vector<FormulaPtr>& fs, const std::set<std::string>& excluded) {
  std::set<std::string> vars;
  for (const auto& f : fs)
    for (const auto& v : free_vars(f))
      if (!excluded.count(v)) vars.insert(v);
  return {vars.begin(), vars.end()};
}

FormulaPtr forall_closure(FormulaPtr f, const std::vector<std::string>& vars) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) f = fb::forall(*it, f);
  return f;
}

std::string fresh_var(const std::string& base, const std::set<std::string>& avoid) {
  std::string v = base;
  while (avoid.count(v)) v += "'";
  return v;
}

}  // namespace

FormulaPtr instantiate_induction(const FormulaPtr& phi, const std::string& x) {
  FormulaPtr base = substitute(phi, x, zero());
  FormulaPtr step = fb::forall(x, fb::implies(phi, substitute(phi, x, succ(var(x)))));
  FormulaPtr conclusion = fb::forall(x, phi);
  FormulaPtr iPhi = fb::implies(fb::conj(base, step), conclusion);
  return forall_closure(iPhi, sorted_free_vars_excluding({phi}, {x}));
}

FormulaPtr instantiate_ect0(const FormulaPtr& phi, const FormulaPtr& psi,
                            const std::string& x, const std::string& y) {
  if (!classify(phi).isAlmostNegative)
    throw std::invalid_argument("ECT0 requires an almost negative hypothesis");
  std::set<std::string> used = free_vars(phi);
  for (const auto& v : free_vars(psi)) used.insert(v);
  used.insert(x);
  used.insert(y);
  std::string z = fresh_var("z", used);
  used.insert(z);
  std::string u = fresh_var("u", used);

  FormulaPtr antecedent = fb::forall(x, fb::implies(phi, fb::exists(y, psi)));
  FormulaPtr tAtom = fb::pred(builtin::kT, {var(z), var(x), var(u)});
  FormulaPtr psiU = substitute(psi, y, apply(builtin::kU, {var(u)}));
  FormulaPtr consequent =
      fb::exists(z, fb::forall(x, fb::implies(phi, fb::exists(u, fb::conj(tAtom, psiU)))));
  FormulaPtr body = fb::implies(antecedent, consequent);
  return forall_closure(body, sorted_free_vars_excluding({phi, psi}, {x, y}));
}

FormulaPtr instantiate_mp(const FormulaPtr& phi, const std::string& x) {
  FormulaPtr decidable = fb::forall(x, fb::disj(phi, fb::neg(phi)));
  FormulaPtr dneg = fb::neg(fb::neg(fb::exists(x, phi)));
  FormulaPtr body = fb::implies(fb::conj(decidable, dneg), fb::exists(x, phi));
  return forall_closure(body, sorted_free_vars_excluding({phi}, {x}));
}

FormulaPtr theta_instance() {
  // H(x) := exists v T(x,x,v); psi := (y=0 /\ H(x)) \/ (~(y=0) /\ ~H(x)).
  FormulaPtr h = fb::exists("v", fb::pred(builtin::kT, {var("x"), var("x"), var("v")}));
  FormulaPtr yIsZero = fb::eq(var("y"), zero());
  FormulaPtr psi = fb::disj(fb::conj(yIsZero, h), fb::conj(fb::neg(yIsZero), fb::neg(h)));
  return instantiate_ect0(fb::top(), psi, "x", "y");
}

// --- qf_to_atomic -----------------------------------------------------------

namespace {

TermPtr chi_term(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Top:
      return zero();
    case Formula::Kind::Bottom:
      return succ(zero());
    case Formula::Kind::AtomEq:
      // sg(|t - s|): 0 iff t = s.
      return apply("sg", {apply("absdiff", {f->terms[0], f->terms[1]})});
    case Formula::Kind::AtomPred:
      throw std::invalid_argument(
          "qf_to_atomic: predicate atoms have no characteristic term");
    case Formula::Kind::And:
      return apply("max", {chi_term(f->left), chi_term(f->right)});
    case Formula::Kind::Or:
      return apply("*", {chi_term(f->left), chi_term(f->right)});
    case Formula::Kind::Implies:
      // 0 when the hypothesis fails, chi of the conclusion otherwise.
      return apply("*", {chi_term(f->right),
                         apply("sg", {apply("monus", {succ(zero()), chi_term(f->left)})})});
    case Formula::Kind::Not:
      return apply("monus", {succ(zero()), chi_term(f->left)});
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      throw std::invalid_argument("qf_to_atomic: quantified input");
  }
  throw std::logic_error("chi_term: unreachable");
}

}  // namespace

QfToAtomic qf_to_atomic(const FormulaPtr& f) {
  if (!classify(f).isQuantifierFree)
    throw std::invalid_argument("qf_to_atomic: quantified input");
  QfToAtomic out;
  out.chi = chi_term(f);
  out.atomic = fb::eq(out.chi, zero());
  return out;
}

// --- contract_quantifiers ---------------------------------------------------

namespace {

// Contracts the leading like-quantifier block of f (if longer than 1) and
// recurses into the block that follows. Does not descend into the matrix.
FormulaPtr contract_from(const FormulaPtr& f) {
  if (f->kind != Formula::Kind::Forall && f->kind != Formula::Kind::Exists) return f;
  Formula::Kind q = f->kind;
  std::vector<std::string> block;
  FormulaPtr body = f;
  while (body->kind == q) {
    block.push_back(body->name);
    body = body->left;
  }
  FormulaPtr rest = contract_from(body);
  if (block.size() == 1) {
    // Unary blocks are left unchanged; the rewrite would be semantically idle.
    return q == Formula::Kind::Forall ? fb::forall(block[0], rest)
                                      : fb::exists(block[0], rest);
  }
  std::set<std::string> avoid = free_vars(rest);
  for (const auto& v : block) avoid.insert(v);
  std::string zv = fresh_var("z", avoid);
  FormulaPtr matrix = rest;
  // Innermost binders first so shadowed outer binders are skipped.
  for (size_t i = block.size(); i-- > 0;) {
    bool shadowed = false;
    for (size_t j = i + 1; j < block.size(); ++j)
      if (block[j] == block[i]) shadowed = true;
    if (shadowed) continue;
    matrix = substitute(matrix, block[i],
                        apply(builtin::kDec, {var(zv), numeral(Nat(i))}));
  }
  return q == Formula::Kind::Forall ? fb::forall(zv, matrix) : fb::exists(zv, matrix);
}

}  // namespace

FormulaPtr contract_quantifiers(const FormulaPtr& f) {
  if (f->kind != Formula::Kind::Forall && f->kind != Formula::Kind::Exists)
    throw std::invalid_argument("contract_quantifiers: no leading quantifier block");
  return contract_from(f);
}

}  // namespace ifol
