#ifndef BRAIDFORGE_RENDER_HPP
#define BRAIDFORGE_RENDER_HPP

#include <string>

#include "braid.hpp"

namespace braidforge {

// ASCII diagram, one row per letter, one column per strand; a crossing shows
// as \/ across the two strands it swaps.
std::string render_ascii(const BraidWord& w);

}  // namespace braidforge

#endif
