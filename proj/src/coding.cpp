#include "ifol/coding.hpp"

#include <sstream>

namespace ifol {

// --- Pairing ------------------------------------------------------------------

Nat pair(const Nat& x, const Nat& y) {
  if (x > 100000000) throw CodeError("pair: first component too large (2^x blows up)");
  Nat p = Nat(1) << x.convert_to<size_t>();
  return p * (2 * y + 1) - 1;
}

std::pair<Nat, Nat> unpair(const Nat& n) {
  Nat m = n + 1;  // m >= 1, m = 2^x * (2y+1)
  size_t x = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++x;
  }
  return {Nat(x), (m - 1) / 2};
}

Nat j1(const Nat& n) { return unpair(n).first; }
Nat j2(const Nat& n) { return unpair(n).second; }

// --- Prime-power sequences ------------------------------------------------------

namespace {
std::vector<uint64_t>& prime_cache() {
  static std::vector<uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  return primes;
}
}  // namespace

Nat nth_prime(size_t i) {
  auto& primes = prime_cache();
  while (primes.size() <= i) {
    uint64_t c = primes.back() + 2;
    while (true) {
      bool isPrime = true;
      for (uint64_t p : primes) {
        if (p * p > c) break;
        if (c % p == 0) {
          isPrime = false;
          break;
        }
      }
      if (isPrime) break;
      c += 2;
    }
    primes.push_back(c);
  }
  return Nat(primes[i]);
}

Nat encode_seq(const std::vector<Nat>& elems) {
  Nat code = 1;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 0) throw CodeError("encode_seq: negative entry");
    Nat p = nth_prime(i);
    Nat e = elems[i] + 1;
    // p^e by binary exponentiation.
    Nat acc = 1, base = p, exp = e;
    while (exp > 0) {
      if ((exp & 1) != 0) acc *= base;
      exp >>= 1;
      if (exp > 0) base *= base;
    }
    code *= acc;
  }
  return code;
}

Nat decode_at(const Nat& n, const Nat& i) {
  if (n <= 0) return 0;
  if (i > 1000000) throw CodeError("decode_at: index too large");
  Nat p = nth_prime(static_cast<size_t>(i));
  Nat m = n;
  Nat exponent = 0;
  while (m % p == 0) {
    m /= p;
    ++exponent;
  }
  return exponent == 0 ? Nat(0) : exponent - 1;
}

// --- Positional lists -----------------------------------------------------------

Nat encode_list(const std::vector<Nat>& elems) {
  // Build the digit string most-significant first, then fold base 4.
  std::vector<int> digits;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) digits.push_back(3);
    const Nat& e = elems[i];
    if (e < 0) throw CodeError("encode_list: negative entry");
    if (e == 0) {
      digits.push_back(1);
    } else {
      size_t bits = msb(e) + 1;
      for (size_t b = bits; b-- > 0;)
        digits.push_back(bit_test(e, b) ? 2 : 1);
    }
  }
  Nat code = 0;
  for (int d : digits) code = code * 4 + d;
  return code;
}

std::optional<std::vector<Nat>> decode_list(const Nat& code) {
  if (code < 0) return std::nullopt;
  if (code == 0) return std::vector<Nat>{};
  std::vector<int> digits;
  Nat m = code;
  while (m > 0) {
    digits.push_back(static_cast<int>(m % 4));
    m /= 4;
  }
  // digits are least-significant first; walk from the most significant end.
  std::vector<Nat> out;
  Nat cur = 0;
  bool inElement = false;
  for (size_t i = digits.size(); i-- > 0;) {
    int d = digits[i];
    if (d == 0) return std::nullopt;
    if (d == 3) {
      if (!inElement) return std::nullopt;  // empty chunk
      out.push_back(cur);
      cur = 0;
      inElement = false;
    } else {
      cur = cur * 2 + (d - 1);
      inElement = true;
    }
  }
  if (!inElement) return std::nullopt;  // trailing separator
  out.push_back(cur);
  return out;
}

// --- Godel numbering -------------------------------------------------------------

namespace {

constexpr int kTagVar = 0, kTagApply = 1, kTagTop = 2, kTagBottom = 3, kTagEq = 4,
              kTagPred = 5, kTagAnd = 6, kTagOr = 7, kTagImplies = 8, kTagNot = 9,
              kTagForall = 10, kTagExists = 11;

[[noreturn]] void bad(const std::string& what, const Nat& code) {
  std::string s = code.str();
  if (s.size() > 40) s = s.substr(0, 40) + "...";
  throw CodeError("godel_decode: " + what + " at code " + s);
}

}  // namespace

Nat string_code(const std::string& s) {
  std::vector<Nat> bytes;
  bytes.reserve(s.size());
  for (unsigned char c : s) bytes.push_back(Nat(c));
  return encode_list(bytes);
}

std::string string_decode(const Nat& code) {
  auto bytes = decode_list(code);
  if (!bytes) throw CodeError("string_decode: invalid list code");
  std::string s;
  for (const Nat& b : *bytes) {
    if (b < 1 || b > 255) throw CodeError("string_decode: byte out of range");
    s.push_back(static_cast<char>(b.convert_to<unsigned>()));
  }
  return s;
}

Nat godel_number(const TermPtr& t) {
  if (t->kind == Term::Kind::Variable)
    return encode_list({Nat(kTagVar), string_code(t->name)});
  std::vector<Nat> fields = {Nat(kTagApply), string_code(t->name)};
  for (const auto& a : t->args) fields.push_back(godel_number(a));
  return encode_list(fields);
}

Nat godel_number(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Top:
      return encode_list({Nat(kTagTop)});
    case Formula::Kind::Bottom:
      return encode_list({Nat(kTagBottom)});
    case Formula::Kind::AtomEq:
      return encode_list({Nat(kTagEq), godel_number(f->terms[0]), godel_number(f->terms[1])});
    case Formula::Kind::AtomPred: {
      std::vector<Nat> fields = {Nat(kTagPred), string_code(f->name)};
      for (const auto& a : f->terms) fields.push_back(godel_number(a));
      return encode_list(fields);
    }
    case Formula::Kind::And:
      return encode_list({Nat(kTagAnd), godel_number(f->left), godel_number(f->right)});
    case Formula::Kind::Or:
      return encode_list({Nat(kTagOr), godel_number(f->left), godel_number(f->right)});
    case Formula::Kind::Implies:
      return encode_list({Nat(kTagImplies), godel_number(f->left), godel_number(f->right)});
    case Formula::Kind::Not:
      return encode_list({Nat(kTagNot), godel_number(f->left)});
    case Formula::Kind::Forall:
      return encode_list({Nat(kTagForall), string_code(f->name), godel_number(f->left)});
    case Formula::Kind::Exists:
      return encode_list({Nat(kTagExists), string_code(f->name), godel_number(f->left)});
  }
  throw std::logic_error("godel_number: unreachable");
}

TermPtr godel_decode_term(const Nat& code) {
  auto fields = decode_list(code);
  if (!fields || fields->empty()) bad("not a list", code);
  const Nat& tag = (*fields)[0];
  if (tag == kTagVar) {
    if (fields->size() != 2) bad("variable needs one field", code);
    return var(string_decode((*fields)[1]));
  }
  if (tag == kTagApply) {
    if (fields->size() < 2) bad("apply needs a function name", code);
    std::vector<TermPtr> args;
    for (size_t i = 2; i < fields->size(); ++i)
      args.push_back(godel_decode_term((*fields)[i]));
    return apply(string_decode((*fields)[1]), std::move(args));
  }
  bad("unknown term tag", code);
}

FormulaPtr godel_decode(const Nat& code) {
  auto fields = decode_list(code);
  if (!fields || fields->empty()) bad("not a list", code);
  long tag = (*fields)[0] > 1000 ? -1 : (*fields)[0].convert_to<long>();
  auto need = [&](size_t n) {
    if (fields->size() != n) bad("wrong field count for tag " + std::to_string(tag), code);
  };
  switch (tag) {
    case kTagTop:
      need(1);
      return fb::top();
    case kTagBottom:
      need(1);
      return fb::bottom();
    case kTagEq:
      need(3);
      return fb::eq(godel_decode_term((*fields)[1]), godel_decode_term((*fields)[2]));
    case kTagPred: {
      if (fields->size() < 2) bad("predicate needs a name", code);
      std::vector<TermPtr> args;
      for (size_t i = 2; i < fields->size(); ++i)
        args.push_back(godel_decode_term((*fields)[i]));
      return fb::pred(string_decode((*fields)[1]), std::move(args));
    }
    case kTagAnd:
      need(3);
      return fb::conj(godel_decode((*fields)[1]), godel_decode((*fields)[2]));
    case kTagOr:
      need(3);
      return fb::disj(godel_decode((*fields)[1]), godel_decode((*fields)[2]));
    case kTagImplies:
      need(3);
      return fb::implies(godel_decode((*fields)[1]), godel_decode((*fields)[2]));
    case kTagNot:
      need(2);
      return fb::neg(godel_decode((*fields)[1]));
    case kTagForall:
      need(3);
      return fb::forall(string_decode((*fields)[1]), godel_decode((*fields)[2]));
    case kTagExists:
      need(3);
      return fb::exists(string_decode((*fields)[1]), godel_decode((*fields)[2]));
    default:
      bad("unknown formula tag", code);
  }
}

bool is_formula_code(const Nat& code) {
  try {
    godel_decode(code);
    return true;
  } catch (const CodeError&) {
    return false;
  }
}

bool is_existential_sentence_code(const Nat& code) {
  try {
    FormulaPtr f = godel_decode(code);
    return f->kind == Formula::Kind::Exists && is_sentence(f);
  } catch (const CodeError&) {
    return false;
  }
}

Nat numeral_subst_code(const Nat& formulaCode, const Nat& c, const std::string& v) {
  FormulaPtr f = godel_decode(formulaCode);
  if (!free_vars(f).count(v))
    throw CodeError("numeral_subst_code: variable " + v + " is not free");
  if (c > 1000000) throw CodeError("numeral_subst_code: numeral too large to materialize");
  return godel_number(substitute(f, v, numeral(c)));
}

std::string tag_table_text() {
  std::ostringstream os;
  os << "list code: elements in binary (MSB first, '0' for zero), digits bit0->1 bit1->2,\n"
     << "           separator->3, read base 4; empty list -> 0; strings = byte lists\n"
     << "tag  node            fields\n"
     << "  0  term variable   [strcode(name)]\n"
     << "  1  term apply      [strcode(fn), code(arg)...]\n"
     << "  2  true            []\n"
     << "  3  false           []\n"
     << "  4  t = s           [code(t), code(s)]\n"
     << "  5  P(t...)         [strcode(P), code(t)...]\n"
     << "  6  and             [code(l), code(r)]\n"
     << "  7  or              [code(l), code(r)]\n"
     << "  8  implies         [code(l), code(r)]\n"
     << "  9  not             [code(f)]\n"
     << " 10  forall          [strcode(v), code(body)]\n"
     << " 11  exists          [strcode(v), code(body)]\n"
     << " 12  INC r           [r]\n"
     << " 13  DECJZ r l       [r, l]\n"
     << " 14  HALT            []\n";
  return os.str();
}

}  // namespace ifol
