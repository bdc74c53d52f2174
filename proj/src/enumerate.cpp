#include "enumerate.hpp"

#include "errors.hpp"

namespace braidforge {

namespace {

void fill_exponents(const EnumBounds& bounds, std::vector<Block>& blocks, std::size_t at,
                    const std::function<void(const TLinkSpec&)>& emit) {
  if (at == blocks.size()) {
    emit(TLinkSpec{blocks});
    return;
  }
  // A trailing exponent-1 block would denormalize (it folds into the previous
  // block), so the last of several blocks starts at 2.
  int lo = (at + 1 == blocks.size() && blocks.size() >= 2) ? 2 : 1;
  for (int s = lo; s <= bounds.q_max; ++s) {
    blocks[at].s = s;
    fill_exponents(bounds, blocks, at + 1, emit);
  }
}

void fill_widths(const EnumBounds& bounds, std::vector<Block>& blocks, std::size_t at, int lo,
                 const std::function<void(const TLinkSpec&)>& emit) {
  if (at == blocks.size()) {
    fill_exponents(bounds, blocks, 0, emit);
    return;
  }
  for (int r = lo; r <= bounds.p_max - static_cast<int>(blocks.size() - at - 1); ++r) {
    blocks[at].r = r;
    fill_widths(bounds, blocks, at + 1, r + 1, emit);
  }
}

}  // namespace

void enumerate_specs(const EnumBounds& bounds,
                     const std::function<void(const TLinkSpec&)>& emit) {
  if (bounds.p_max < 2 || bounds.q_max < 1 || bounds.block_max < 1)
    throw ValidationError("enumeration bounds must be positive (widths start at 2)");
  for (int n = 1; n <= bounds.block_max; ++n) {
    std::vector<Block> blocks(n);
    fill_widths(bounds, blocks, 0, 2, emit);
  }
}

std::vector<TLinkSpec> enumerate_specs(const EnumBounds& bounds) {
  std::vector<TLinkSpec> out;
  enumerate_specs(bounds, [&](const TLinkSpec& t) { out.push_back(t); });
  return out;
}

}  // namespace braidforge
