#ifndef IFOL_CODING_HPP
#define IFOL_CODING_HPP

#include <optional>
#include <string>
#include <vector>

#include "ifol/nat.hpp"
#include "ifol/syntax.hpp"

namespace ifol {

struct CodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Pairing j(x,y) = 2^x * (2y+1) - 1 with total two-sided projections.
// ---------------------------------------------------------------------------

Nat pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> unpair(const Nat& n);
Nat j1(const Nat& n);  // first projection of unpair
Nat j2(const Nat& n);

// ---------------------------------------------------------------------------
// Prime-power sequence coding: encode_seq([a0..ak-1]) = prod p_i^(a_i + 1)
// over the first k primes, empty sequence -> 1. decode_at(n, i) is the
// exponent of p_i minus one, and 0 when p_i does not divide n (also for
// out-of-range i; a convention, the paper leaves it open).
//
// Entries appear as exponents, so this coder is only for flat sequences of
// small numbers (register files, coded tuples). Structural codes (formulas,
// programs, proofs, traces) use encode_list below.
// ---------------------------------------------------------------------------

Nat encode_seq(const std::vector<Nat>& elems);
Nat decode_at(const Nat& n, const Nat& i);
Nat nth_prime(size_t i);

// ---------------------------------------------------------------------------
// Positional list coding, the structural backbone. Each element is written in
// binary (MSB first, "0" for zero), elements are joined with a separator, and
// the resulting digit string over {bit0, bit1, sep} = {1, 2, 3} is read as a
// base-4 number. The empty list is 0. A digit 0 or an empty element chunk
// makes a code invalid.
// ---------------------------------------------------------------------------

Nat encode_list(const std::vector<Nat>& elems);
std::optional<std::vector<Nat>> decode_list(const Nat& code);

// ---------------------------------------------------------------------------
// Godel numbering: code(node) = encode_list([tag, fields...]) with the tag
// table below (also printed by `ifol encode --dump-tags`). Strings are coded
// as lists of byte values.
//
//   tag  node            fields
//    0   term variable   [strcode(name)]
//    1   term apply      [strcode(fn), code(arg)...]
//    2   true            []
//    3   false           []
//    4   t = s           [code(t), code(s)]
//    5   P(t...)         [strcode(P), code(t)...]
//    6   and             [code(l), code(r)]
//    7   or              [code(l), code(r)]
//    8   implies         [code(l), code(r)]
//    9   not             [code(f)]
//   10   forall          [strcode(v), code(body)]
//   11   exists          [strcode(v), code(body)]
//   12   INC r           [r]
//   13   DECJZ r l       [r, l]
//   14   HALT            []
// ---------------------------------------------------------------------------

Nat string_code(const std::string& s);
std::string string_decode(const Nat& code);  // throws CodeError when invalid

Nat godel_number(const TermPtr& t);
Nat godel_number(const FormulaPtr& f);
FormulaPtr godel_decode(const Nat& code);      // throws CodeError with a diagnostic
TermPtr godel_decode_term(const Nat& code);

// True when the code is a well-formed formula (used by delegated predicates).
bool is_formula_code(const Nat& code);
// True when the code is a sentence of the shape exists y . phi.
bool is_existential_sentence_code(const Nat& code);

// Code of the formula obtained by substituting the numeral of c for var; the
// paper's notation for the result is the coded phi(c-dot).
Nat numeral_subst_code(const Nat& formulaCode, const Nat& c, const std::string& var);

std::string tag_table_text();

}  // namespace ifol

#endif
