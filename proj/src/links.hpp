#ifndef BRAIDFORGE_LINKS_HPP
#define BRAIDFORGE_LINKS_HPP

#include <utility>
#include <vector>

#include "braid.hpp"

namespace braidforge {

struct Block {
  int r;  // block width
  int s;  // exponent
  bool operator==(const Block& o) const { return r == o.r && s == o.s; }
};

// T((r1,s1),...,(rn,sn)): closure of asc blocks at width rn. Normalized form:
// 2 <= r1 < ... < rn, every s >= 1, and (rn, 1) tails folded away when n >= 2.
struct TLinkSpec {
  std::vector<Block> blocks;
  bool operator==(const TLinkSpec& o) const { return blocks == o.blocks; }
  bool operator!=(const TLinkSpec& o) const { return !(*this == o); }
};

// V(rev; plain; (p,q)): desc-right blocks (u, v-overline), then asc blocks,
// then the full torus block, all at width p. torus.s holds the total exponent.
struct VLinkSpec {
  std::vector<Block> rev;    // (u, v), u strictly increasing, u_m <= p
  std::vector<Block> plain;  // (r, s), r strictly increasing, r_n < p
  Block torus;               // (p, q_total), p <= q_total
  bool operator==(const VLinkSpec& o) const {
    return rev == o.rev && plain == o.plain && torus == o.torus;
  }
  bool operator!=(const VLinkSpec& o) const { return !(*this == o); }
};

// Throws ValidationError on invariant breach. p = 1 is tolerated only for the
// degenerate unknot form V(;;(1,q)).
void validate(const TLinkSpec& t);
void validate(const VLinkSpec& v);

// Drop zero-exponent blocks, merge adjacent equal-width blocks, fold a
// trailing (rn, 1) into its neighbor when n >= 2. Throws EmptyLink when
// nothing remains, ValidationError when widths are out of order.
TLinkSpec normalize_t(const TLinkSpec& raw);

bool is_normalized(const TLinkSpec& t);

BraidWord braid_of_t(const TLinkSpec& t);
BraidWord braid_of_v(const VLinkSpec& v);

bool is_knot(const TLinkSpec& t);
bool is_knot(const VLinkSpec& v);

// q_total = k*p + q' with 0 < q' < p, or {0, 0} when p divides q_total
// (no decomposition; the arithmetic rules then stay silent).
struct TorusExponent {
  int k;
  int q_prime;
};
TorusExponent split_torus_exponent(const VLinkSpec& v);

}  // namespace braidforge

#endif
