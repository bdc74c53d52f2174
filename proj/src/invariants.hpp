#ifndef BRAIDFORGE_INVARIANTS_HPP
#define BRAIDFORGE_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "braid.hpp"
#include "laurent.hpp"

namespace braidforge {

// Alexander polynomial of the closure, from the reduced Burau matrix:
// det(I - B(w)) divided (exactly) by 1 + t + ... + t^{strands-1}, then
// unit-normalized so the lowest term has degree 0 and positive coefficient.
// The determinant is computed by exact modular evaluation-interpolation under
// two fixed primes with a CRT range check; any internal disagreement or an
// inexact division throws InternalError. One-strand words return 1.
LaurentPoly alexander(const BraidWord& w);

// Kauffman-bracket state sum with writhe correction. Returned in the variable
// x = t^{1/2} (exponents doubled relative to t), with the mirror fixed so
// positive words come out negative-exponent-dominant. Words with more
// crossings than crossing_limit return nullopt.
std::optional<LaurentPoly> kauffman_jones(const BraidWord& w, int crossing_limit = 16);

struct InvariantProfile {
  int components;
  std::int64_t euler_char;
  std::int64_t crossings;
  int strands;
  LaurentPoly alexander;                // normalized
  std::optional<LaurentPoly> jones;     // doubled exponents; absent over limit
};

InvariantProfile profile(const BraidWord& w, int jones_limit = 16);

struct ConsistencyReport {
  bool consistent;
  std::string distinguished_by;  // empty when consistent
};

// Field order: components, alexander, euler_char, jones (jones only when both
// sides carry one). Verdict says "compatible", never "equal as links".
ConsistencyReport consistent(const InvariantProfile& a, const InvariantProfile& b);

}  // namespace braidforge

#endif
