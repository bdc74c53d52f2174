#ifndef BRAIDFORGE_CONVERT_HPP
#define BRAIDFORGE_CONVERT_HPP

#include <utility>

#include "links.hpp"
#include "trace.hpp"

namespace braidforge {

struct TToVResult {
  VLinkSpec v;
  ConversionTrace trace;
};

// Rewrite a normalized T-spec as a V-spec with the same closure, trading the
// widest blocks for reversed blocks until the torus block absorbs the rest.
// The scan walks partial sums S_i = s_n + ... + s_{n-i} from i = 0 and stops
// at the first i where S_i reaches r_{n-i} (absorb) or r_{n-i-1} (swap, with
// r_0 := 0 so i = n-1 always terminates).
TToVResult t_to_v(const TLinkSpec& t);

struct VToTResult {
  TLinkSpec first;   // plain blocks kept, reversed blocks unwound past the torus
  TLinkSpec second;  // reversed blocks kept as plain, torus transposed
};

// The two T-spec presentations of a V-link's closure, both normalized.
VToTResult v_to_t(const VLinkSpec& v);

struct DualResult {
  TLinkSpec dual;
  bool self_dual;
};

// The partner T-spec presenting the same closure: round-trip through the
// V-form and keep the form that differs from the (normalized) input.
DualResult dual_t(const TLinkSpec& t);

// braid_of_v of the converted form; width equals the closure's braid index.
BraidWord minimal_braid(const TLinkSpec& t);

}  // namespace braidforge

#endif
