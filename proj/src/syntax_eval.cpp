#include "ifol/syntax.hpp"

namespace ifol {

namespace {

Nat eval_pr_body(const PRBodyPtr& body, const std::vector<Nat>& args,
                 const Signature& sig, const EvalHooks& hooks);

Nat eval_named(const std::string& name, const std::vector<Nat>& args,
               const Signature& sig, const EvalHooks& hooks) {
  if (name == "0") return 0;
  if (name == "S") return args.at(0) + 1;
  if (name == "+") return args.at(0) + args.at(1);
  if (name == "*") return args.at(0) * args.at(1);
  if (const PRDefinition* def = sig.pr_definition(name)) {
    if (static_cast<int>(args.size()) != def->arity)
      throw EvalError("arity mismatch for " + name);
    return eval_pr_body(def->body, args, sig, hooks);
  }
  if (hooks.function) {
    if (auto r = hooks.function(name, args)) return *r;
  }
  throw EvalError("unknown function symbol: " + name);
}

Nat eval_pr_body(const PRBodyPtr& body, const std::vector<Nat>& args,
                 const Signature& sig, const EvalHooks& hooks) {
  switch (body->kind) {
    case PRBody::Kind::Zero:
      return 0;
    case PRBody::Kind::Succ:
      return args.at(0) + 1;
    case PRBody::Kind::Proj:
      return args.at(body->index);
    case PRBody::Kind::Named:
      return eval_named(body->name, args, sig, hooks);
    case PRBody::Kind::Compose: {
      std::vector<Nat> inner;
      inner.reserve(body->inners.size());
      for (const auto& h : body->inners)
        inner.push_back(eval_pr_body(h, args, sig, hooks));
      return eval_pr_body(body->outer, inner, sig, hooks);
    }
    case PRBody::Kind::PrimRec: {
      // f(0,ys) = g(ys); f(Sn,ys) = h(n, f(n,ys), ys). Iterative to keep the
      // recursion depth independent of the argument.
      if (args.empty()) throw EvalError("primitive recursion needs an argument");
      Nat n = args[0];
      std::vector<Nat> rest(args.begin() + 1, args.end());
      Nat acc = eval_pr_body(body->outer, rest, sig, hooks);
      for (Nat i = 0; i < n; ++i) {
        std::vector<Nat> hargs;
        hargs.reserve(rest.size() + 2);
        hargs.push_back(i);
        hargs.push_back(acc);
        for (const auto& y : rest) hargs.push_back(y);
        acc = eval_pr_body(body->inners[0], hargs, sig, hooks);
      }
      return acc;
    }
  }
  throw std::logic_error("eval_pr_body: unreachable");
}

}  // namespace

Nat eval_term(const TermPtr& t, const Env& env, const Signature& sig,
              const EvalHooks& hooks) {
  if (t->kind == Term::Kind::Variable) {
    auto it = env.find(t->name);
    if (it == env.end()) throw EvalError("unbound variable: " + t->name);
    return it->second;
  }
  std::vector<Nat> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(eval_term(a, env, sig, hooks));
  return eval_named(t->name, args, sig, hooks);
}

bool eval_classical_qf(const FormulaPtr& f, const Signature& sig,
                       const EvalHooks& hooks, const Env& env) {
  switch (f->kind) {
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::AtomEq:
      return eval_term(f->terms[0], env, sig, hooks) ==
             eval_term(f->terms[1], env, sig, hooks);
    case Formula::Kind::AtomPred: {
      std::vector<Nat> args;
      args.reserve(f->terms.size());
      for (const auto& a : f->terms) args.push_back(eval_term(a, env, sig, hooks));
      if (hooks.predicate) {
        if (auto r = hooks.predicate(f->name, args)) return *r;
      }
      throw EvalError("unknown predicate symbol: " + f->name);
    }
    case Formula::Kind::And:
      return eval_classical_qf(f->left, sig, hooks, env) &&
             eval_classical_qf(f->right, sig, hooks, env);
    case Formula::Kind::Or:
      return eval_classical_qf(f->left, sig, hooks, env) ||
             eval_classical_qf(f->right, sig, hooks, env);
    case Formula::Kind::Implies:
      return !eval_classical_qf(f->left, sig, hooks, env) ||
             eval_classical_qf(f->right, sig, hooks, env);
    case Formula::Kind::Not:
      return !eval_classical_qf(f->left, sig, hooks, env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      throw EvalError("eval_classical_qf: quantified formula");
  }
  throw std::logic_error("eval_classical_qf: unreachable");
}

// --- Defining axioms ---------------------------------------------------------

TermPtr render_pr_body(const PRBodyPtr& body, const std::vector<TermPtr>& args) {
  switch (body->kind) {
    case PRBody::Kind::Zero:
      return zero();
    case PRBody::Kind::Succ:
      return succ(args.at(0));
    case PRBody::Kind::Proj:
      return args.at(body->index);
    case PRBody::Kind::Named:
      return apply(body->name, args);
    case PRBody::Kind::Compose: {
      std::vector<TermPtr> inner;
      inner.reserve(body->inners.size());
      for (const auto& h : body->inners) inner.push_back(render_pr_body(h, args));
      return render_pr_body(body->outer, inner);
    }
    case PRBody::Kind::PrimRec:
      throw std::invalid_argument("primitive recursion bodies cannot be rendered as terms");
  }
  throw std::logic_error("render_pr_body: unreachable");
}

std::vector<FormulaPtr> pr_defining_axioms(const PRDefinition& def) {
  auto argVars = [&](int count, int offset = 0) {
    std::vector<TermPtr> vs;
    for (int i = 0; i < count; ++i) vs.push_back(var("y" + std::to_string(i + offset)));
    return vs;
  };
  auto close = [&](FormulaPtr f) {
    std::set<std::string> vs = free_vars(f);
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) f = fb::forall(*it, f);
    return f;
  };

  if (def.body->kind == PRBody::Kind::PrimRec) {
    // f(0, ys) = g(ys)  and  forall n ys: f(Sn, ys) = h(n, f(n,ys), ys).
    std::vector<TermPtr> ys = argVars(def.arity - 1);
    std::vector<TermPtr> baseArgs = {zero()};
    baseArgs.insert(baseArgs.end(), ys.begin(), ys.end());
    FormulaPtr baseAx =
        close(fb::eq(apply(def.name, baseArgs), render_pr_body(def.body->outer, ys)));

    TermPtr n = var("n");
    std::vector<TermPtr> stepLhsArgs = {succ(n)};
    stepLhsArgs.insert(stepLhsArgs.end(), ys.begin(), ys.end());
    std::vector<TermPtr> recArgs = {n};
    recArgs.insert(recArgs.end(), ys.begin(), ys.end());
    std::vector<TermPtr> hArgs = {n, apply(def.name, recArgs)};
    hArgs.insert(hArgs.end(), ys.begin(), ys.end());
    FormulaPtr stepAx =
        close(fb::eq(apply(def.name, stepLhsArgs), render_pr_body(def.body->inners[0], hArgs)));
    return {baseAx, stepAx};
  }
  std::vector<TermPtr> ys = argVars(def.arity);
  return {close(fb::eq(apply(def.name, ys), render_pr_body(def.body, ys)))};
}

}  // namespace ifol
