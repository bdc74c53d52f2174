#ifndef BRAIDFORGE_ENUMERATE_HPP
#define BRAIDFORGE_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "links.hpp"

namespace braidforge {

struct EnumBounds {
  int p_max = 5;      // largest block width
  int q_max = 5;      // largest block exponent
  int block_max = 2;  // most blocks per spec
};

// Visits every normalized T-spec inside the bounds exactly once, in a fixed
// order: ascending block count, then widths and exponents lexicographically.
void enumerate_specs(const EnumBounds& bounds, const std::function<void(const TLinkSpec&)>& emit);

std::vector<TLinkSpec> enumerate_specs(const EnumBounds& bounds);

}  // namespace braidforge

#endif
