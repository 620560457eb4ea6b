#ifndef IFOL_NAT_HPP
#define IFOL_NAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ifol {

// Arbitrary-precision natural number. Codes (Godel numbers, trace codes,
// pairing values) overflow fixed width immediately, so everything that can
// hold a code uses Nat. Negative values never appear; operations that could
// underflow (monus) are written to stay in N.
using Nat = boost::multiprecision::cpp_int;

inline std::string nat_str(const Nat& n) { return n.str(); }

struct NatHash {
  size_t operator()(const Nat& n) const {
    return std::hash<std::string>{}(n.str());
  }
};

}  // namespace ifol

#endif
