#ifndef IFOL_SYNTAX_HPP
#define IFOL_SYNTAX_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifol/nat.hpp"

namespace ifol {

// ---------------------------------------------------------------------------
// Primitive recursive function definitions.
//
// A PRBody is one of the classic schema forms. Compose/PrimRec refer to other
// functions either by one of the inline forms or by the name of a previously
// declared definition; PrimRec may only appear as the top-level body of a
// named definition (its g/h sub-bodies must be renderable as terms, which
// keeps the defining axioms first-order).
// ---------------------------------------------------------------------------

struct PRBody;
using PRBodyPtr = std::shared_ptr<const PRBody>;

struct PRBody {
  enum class Kind { Zero, Succ, Proj, Named, Compose, PrimRec };
  Kind kind;
  int arity = 0;                 // Zero/Proj: declared arity
  int index = 0;                 // Proj: which argument
  std::string name;              // Named: referenced definition or base symbol
  PRBodyPtr outer;               // Compose: outer g; PrimRec: base g
  std::vector<PRBodyPtr> inners; // Compose: inner h_i; PrimRec: {step h}
};

PRBodyPtr pr_zero(int arity);
PRBodyPtr pr_succ();
PRBodyPtr pr_proj(int arity, int index);
PRBodyPtr pr_named(const std::string& name);
PRBodyPtr pr_compose(PRBodyPtr outer, std::vector<PRBodyPtr> inners);
PRBodyPtr pr_primrec(PRBodyPtr base, PRBodyPtr step);

struct PRDefinition {
  std::string name;
  int arity = 0;
  PRBodyPtr body;
};

// ---------------------------------------------------------------------------
// Signature: declared predicates and functions plus PR definitions.
// An "arithmetic" signature always carries 0, S, +, * and the distinguished
// machine/coding symbols (T, U, j1, j2, dec, ...) evaluated by delegation.
// ---------------------------------------------------------------------------

struct Signature {
  std::vector<std::pair<std::string, int>> predicates;
  std::vector<std::pair<std::string, int>> functions;
  std::vector<PRDefinition> prFunctions;
  bool arithmetic = false;

  std::optional<int> predicate_arity(const std::string& name) const;
  std::optional<int> function_arity(const std::string& name) const;
  const PRDefinition* pr_definition(const std::string& name) const;
  bool knows(const std::string& name) const;

  void add_predicate(const std::string& name, int arity);
  void add_function(const std::string& name, int arity);
  void add_pr(PRDefinition def);
};

// Base arithmetic signature: 0/S/+/* plus the standard PR prelude
// (pred, sg, monus, absdiff, max) and the delegated symbols used by the
// realizability translation and the provability formulas.
Signature arithmetic_signature();

// Names of the delegated symbols, kept in one place.
namespace builtin {
inline constexpr const char* kT = "T";               // T(e,x,u): u codes a halting run
inline constexpr const char* kU = "U";               // U(u): output of a trace code
inline constexpr const char* kJ1 = "j1";             // pairing projections
inline constexpr const char* kJ2 = "j2";
inline constexpr const char* kDec = "dec";           // dec(x,i) = (x)_i sequence decode
inline constexpr const char* kIsExSent = "IsExSent"; // x codes a sentence (exists y)phi
inline constexpr const char* kWitSubst = "WitSubst"; // WitSubst(x,y): code of phi(numeral y)
inline constexpr const char* kPrfQ = "PrfQ";
inline constexpr const char* kPrfIPRA = "PrfIPRA";
inline constexpr const char* kPrfHA = "PrfHA";
inline constexpr const char* kPrfHAECT = "PrfHAECT";
}  // namespace builtin

// ---------------------------------------------------------------------------
// Terms and formulas. Immutable shared trees; all operations are pure.
// Negation is a primitive connective (the forcing clauses treat it directly).
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Variable, Apply };
  Kind kind;
  std::string name;           // variable name or function symbol
  std::vector<TermPtr> args;  // Apply only
};

TermPtr var(const std::string& name);
TermPtr apply(const std::string& fn, std::vector<TermPtr> args = {});
TermPtr zero();
TermPtr succ(TermPtr t);
TermPtr numeral(const Nat& n);
// If t is an iterated-S-over-0 chain, its value.
std::optional<Nat> numeral_value(const TermPtr& t);

bool term_eq(const TermPtr& a, const TermPtr& b);
void term_free_vars(const TermPtr& t, std::set<std::string>& out);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Top, Bottom, AtomEq, AtomPred, And, Or, Implies, Not, Forall, Exists };
  Kind kind;
  std::string name;            // AtomPred: predicate; Forall/Exists: bound variable
  std::vector<TermPtr> terms;  // AtomEq: {lhs, rhs}; AtomPred: arguments
  FormulaPtr left, right;      // children (unary/quantifier use left)
};

namespace fb {  // formula builders
FormulaPtr top();
FormulaPtr bottom();
FormulaPtr eq(TermPtr a, TermPtr b);
FormulaPtr pred(const std::string& name, std::vector<TermPtr> args = {});
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr neg(FormulaPtr a);
FormulaPtr forall(const std::string& v, FormulaPtr body);
FormulaPtr exists(const std::string& v, FormulaPtr body);
}  // namespace fb

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);
bool alpha_equivalent(const FormulaPtr& a, const FormulaPtr& b);
size_t formula_hash(const FormulaPtr& f);
std::set<std::string> free_vars(const FormulaPtr& f);
bool is_sentence(const FormulaPtr& f);
bool is_atomic(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Parsing and printing. The grammar is fixed:
//   identifiers [a-zA-Z][a-zA-Z0-9_']*, keywords forall/exists/true/false,
//   ~  /\  \/  ->  with precedence ~ > /\ > \/ > -> (-> right-associative,
//   /\ and \/ left-associative), quantifiers bind the longest formula to the
//   right, atoms are t = t or P(t,...), terms 0, S(t), t + t, t * t, f(t,...)
//   with * binding tighter than + (both left-associative), decimal numerals
//   desugared to iterated S.
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

// extraConstants: identifiers treated as 0-ary constants even when not in the
// signature (used for Kripke model elements injected as parameters).
FormulaPtr parse_formula(const std::string& text, const Signature& sig,
                         const std::set<std::string>& extraConstants = {});
TermPtr parse_term(const std::string& text, const Signature& sig,
                   const std::set<std::string>& extraConstants = {});
std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& t);

// ---------------------------------------------------------------------------
// Classification.
// ---------------------------------------------------------------------------

struct FormulaClass {
  bool isAtomic = false;
  bool isQuantifierFree = false;
  bool isAlmostNegative = false;  // no \/, exists only immediately before atoms
  bool isSigma1 = false;          // exists-prefix over quantifier-free
  bool isPi1 = false;             // forall-prefix over quantifier-free
  bool isPi2 = false;             // forall-exists-prefix over quantifier-free
};

FormulaClass classify(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Substitution and schema instantiation.
// ---------------------------------------------------------------------------

// Capture-avoiding; bound occurrences untouched; binders renamed with a
// deterministic prime-appending scheme when capture threatens.
TermPtr substitute_term(const TermPtr& t, const std::string& v, const TermPtr& r);
FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& t);

// forall-closure of I_phi = phi(0) /\ forall x(phi -> phi(Sx)) -> forall x phi.
FormulaPtr instantiate_induction(const FormulaPtr& phi, const std::string& inductionVar);

// forall v..(forall x(phi -> exists y psi) ->
//            exists z forall x(phi -> exists u(T(z,x,u) /\ psi[y:=U(u)]))).
// Rejects phi that is not almost negative.
FormulaPtr instantiate_ect0(const FormulaPtr& phi, const FormulaPtr& psi,
                            const std::string& x, const std::string& y);

// forall y..(forall x(phi \/ ~phi) /\ ~~exists x phi -> exists x phi).
FormulaPtr instantiate_mp(const FormulaPtr& phi, const std::string& x);

// The ECT0 instance theta with phi := true and
// psi := (y=0 /\ H(x)) \/ (~(y=0) /\ ~H(x)), H(x) := exists v T(x,x,v).
FormulaPtr theta_instance();

// ---------------------------------------------------------------------------
// Quantifier-free to atomic (characteristic term, 0 encodes true) and
// quantifier block contraction via coded tuples.
// ---------------------------------------------------------------------------

struct QfToAtomic {
  TermPtr chi;        // PR characteristic term, 0 iff classically true
  FormulaPtr atomic;  // chi = 0
};
QfToAtomic qf_to_atomic(const FormulaPtr& f);

// Contracts each maximal leading block of like quantifiers of length > 1 into
// a single quantifier over a coded tuple, substituting dec(z,i) for the block
// variables; length-1 blocks are left unchanged. Errors when f has no leading
// quantifier.
FormulaPtr contract_quantifiers(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Standard-model evaluation. Delegated symbols (T, U, j1, ...) are resolved
// through hooks so the syntax layer stays independent of the machine and
// proof modules; stdmodel.hpp wires the real ones.
// ---------------------------------------------------------------------------

struct EvalHooks {
  std::function<std::optional<Nat>(const std::string&, const std::vector<Nat>&)> function;
  std::function<std::optional<bool>(const std::string&, const std::vector<Nat>&)> predicate;
};

using Env = std::map<std::string, Nat>;

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Nat eval_term(const TermPtr& t, const Env& env, const Signature& sig,
              const EvalHooks& hooks = {});
// f must be closed (modulo env) and quantifier-free.
bool eval_classical_qf(const FormulaPtr& f, const Signature& sig,
                       const EvalHooks& hooks = {}, const Env& env = {});

// Defining axioms of a PR definition (one equation, or base+step for
// primitive recursion), universally closed.
std::vector<FormulaPtr> pr_defining_axioms(const PRDefinition& def);

// Renders a PR body applied to argument terms (PrimRec bodies cannot be
// rendered and throw).
TermPtr render_pr_body(const PRBodyPtr& body, const std::vector<TermPtr>& args);

}  // namespace ifol

#endif
