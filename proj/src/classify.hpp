#ifndef BRAIDFORGE_CLASSIFY_HPP
#define BRAIDFORGE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "braid.hpp"
#include "links.hpp"
#include "trace.hpp"

namespace braidforge {

enum class SatRule { S1, S2 };
enum class HypRule { H1, H2, H3, B1, B2, B3 };
enum class LinkKind { Torus, Satellite, Hyperbolic, Unknown };

const char* to_string(SatRule r);
const char* to_string(HypRule r);
const char* to_string(LinkKind k);

struct SatelliteWitness {
  SatRule rule;
  int d = 0;  // cabling degree of the split (for S2: q_small - c)
  long long eta = 0;  // pattern torus multiplier, S1 only
  VLinkSpec companion;
  bool companion_is_knot = false;
  std::optional<BraidWord> pattern;       // only when the companion is a knot
  std::optional<VLinkSpec> pattern_spec;  // same braid, as merged block parameters
  int a = 0, b = 0, c = 0, q_small = 0;   // S2 factorization data
};

struct HyperbolicWitness {
  HypRule rule;
  int k = 0;        // torus exponent = k*p + q_prime
  int q_prime = 0;  // 0 < q_prime < p
  std::optional<long long> crossing_sum;  // side-braid crossings, H3/B3 only
};

struct GeometricVerdict {
  LinkKind kind = LinkKind::Unknown;
  std::vector<SatelliteWitness> satellites;
  std::vector<HyperbolicWitness> hyperbolics;
  std::vector<std::string> notes;
};

// Cabling split: a degree d > 1 dividing gcd(p, q) splits the side blocks into
// a prefix (widths <= d) kept in the pattern and a suffix (all parameters
// multiples of and greater than d) scaled down into the companion. Smallest
// admissible d wins.
std::optional<SatelliteWitness> satellite_case_one(const VLinkSpec& v);

// Factorization split: p = q_small * a with a, q_small > 1, c = q mod q_small
// nonzero, d = q_small - c; needs u_m <= c, suffix exponents summing to d and
// suffix widths >= p - c. Companion is the torus spec (a, b+1).
std::optional<SatelliteWitness> satellite_case_two(const VLinkSpec& v);

// Knot-only arithmetic conditions on (k, q_prime) with q = k*p + q_prime.
std::optional<HyperbolicWitness> hyp_rule_1(const VLinkSpec& v);
std::optional<HyperbolicWitness> hyp_rule_2(const VLinkSpec& v);
std::optional<HyperbolicWitness> hyp_rule_3(const VLinkSpec& v);

// Raw-braid versions: conditions on beta (r strands) whose closure with
// (sigma_1...sigma_{p-1})^{q + p*k} appended is a knot. which must be B1..B3.
std::optional<HyperbolicWitness> braid_hyp_thm(const BraidWord& beta, int p, int q, int k,
                                               HypRule which);

// Torus iff there are no side blocks; otherwise collects S1, S2 and (for
// knots) H1..H3 witnesses. A spec holding both a satellite and a hyperbolic
// witness is a bug -> InternalError.
GeometricVerdict classify_v(const VLinkSpec& v);

struct TClassification {
  GeometricVerdict verdict;
  VLinkSpec v;
  ConversionTrace trace;
};

TClassification classify_t(const TLinkSpec& t);

}  // namespace braidforge

#endif
