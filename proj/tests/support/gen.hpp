#ifndef IFOL_TESTS_GEN_HPP
#define IFOL_TESTS_GEN_HPP

// Deterministic random generators shared by the property suites.

#include <random>
#include <vector>

#include "ifol/syntax.hpp"

namespace ifol::testgen {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<uint64_t>(n));
}

// Random term over the given variables: 0, S(t), t+t, t*t, variables.
inline TermPtr random_term(Rng& rng, const std::vector<std::string>& vars, int depth) {
  int choices = depth <= 0 ? 2 : 5;
  switch (pick(rng, choices)) {
    case 0:
      return zero();
    case 1:
      if (!vars.empty()) return var(vars[static_cast<size_t>(pick(rng, static_cast<int>(vars.size())))]);
      return zero();
    case 2:
      return succ(random_term(rng, vars, depth - 1));
    case 3:
      return apply("+", {random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1)});
    default:
      return apply("*", {random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1)});
  }
}

// Random quantifier-free formula over equality atoms of such terms.
inline FormulaPtr random_qf(Rng& rng, const std::vector<std::string>& vars, int depth) {
  if (depth <= 0 || pick(rng, 4) == 0) {
    switch (pick(rng, 5)) {
      case 0:
        return fb::top();
      case 1:
        return fb::bottom();
      default:
        return fb::eq(random_term(rng, vars, 2), random_term(rng, vars, 2));
    }
  }
  switch (pick(rng, 4)) {
    case 0:
      return fb::conj(random_qf(rng, vars, depth - 1), random_qf(rng, vars, depth - 1));
    case 1:
      return fb::disj(random_qf(rng, vars, depth - 1), random_qf(rng, vars, depth - 1));
    case 2:
      return fb::implies(random_qf(rng, vars, depth - 1), random_qf(rng, vars, depth - 1));
    default:
      return fb::neg(random_qf(rng, vars, depth - 1));
  }
}

// Random formula (any connective, quantifiers over fresh variables) for
// parser round trips and coding corpora.
inline FormulaPtr random_formula(Rng& rng, std::vector<std::string> vars, int depth,
                                 int quantBudget = 3) {
  if (depth <= 0) return random_qf(rng, vars, 0);
  int c = pick(rng, quantBudget > 0 ? 7 : 5);
  switch (c) {
    case 0:
      return fb::conj(random_formula(rng, vars, depth - 1, quantBudget),
                      random_formula(rng, vars, depth - 1, quantBudget));
    case 1:
      return fb::disj(random_formula(rng, vars, depth - 1, quantBudget),
                      random_formula(rng, vars, depth - 1, quantBudget));
    case 2:
      return fb::implies(random_formula(rng, vars, depth - 1, quantBudget),
                         random_formula(rng, vars, depth - 1, quantBudget));
    case 3:
      return fb::neg(random_formula(rng, vars, depth - 1, quantBudget));
    case 4:
      return random_qf(rng, vars, depth - 1);
    default: {
      std::string v = "q" + std::to_string(quantBudget);
      vars.push_back(v);
      FormulaPtr body = random_formula(rng, vars, depth - 1, quantBudget - 1);
      return c == 5 ? fb::forall(v, body) : fb::exists(v, body);
    }
  }
}

}  // namespace ifol::testgen

#endif
