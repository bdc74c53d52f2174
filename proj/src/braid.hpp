#ifndef BRAIDFORGE_BRAID_HPP
#define BRAIDFORGE_BRAID_HPP

#include <cstdint>
#include <vector>

namespace braidforge {

// Positive braid word on a fixed strand count. Letters are 1-based generator
// indices in [1, strands-1]; the word may be empty. Immutable after build.
class BraidWord {
public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t crossing_count() const { return letters_.size(); }

  bool operator==(const BraidWord& o) const {
    return strands_ == o.strands_ && letters_ == o.letters_;
  }
  bool operator!=(const BraidWord& o) const { return !(*this == o); }

private:
  int strands_;
  std::vector<int> letters_;
};

// Permutation of strand positions induced by reading a word top to bottom.
// image[i] = final position of the strand entering at position i (1-based).
struct StrandPermutation {
  std::vector<int> image;
  int cycle_count() const;
};

// (sigma_1 sigma_2 ... sigma_{r-1})^s at width n. r=n gives the torus block.
BraidWord asc_block(int strands, int r, int s);
// (sigma_{n-1} sigma_{n-2} ... sigma_{n-u+1})^v: descending run anchored at the
// right edge; the overline-block word.
BraidWord desc_right_block(int strands, int u, int v);
// (sigma_{r-1} ... sigma_1)^s: descending run anchored at the left edge.
BraidWord desc_left_block(int strands, int r, int s);
// rotate180 image of desc_right_block, which lands back on the left edge:
// equal to asc_block(strands, u, v).
BraidWord asc_right_block(int strands, int u, int v);

// Concatenation; widths must agree.
BraidWord concat(const BraidWord& a, const BraidWord& b);

// Rotate the diagram by pi: letter i -> strands - i, order preserved.
BraidWord rotate180(const BraidWord& w);

StrandPermutation permutation(const BraidWord& w);

// Component count of the closure = cycles of the strand permutation.
int components(const BraidWord& w);

// Widen to more strands (added strands are idle; closure gains unknot
// components unless later letters use them). Letters unchanged.
BraidWord embed(const BraidWord& w, int strands);

// Remove a sole sigma_{n-1} that commutes past everything after it; result has
// one strand fewer and the same closure. Throws NotDestabilizable otherwise.
BraidWord destabilize_right(const BraidWord& w);

// Euler characteristic of the Bennequin surface: strands - crossings.
std::int64_t euler_char(const BraidWord& w);

// True iff (sigma_1 ... sigma_{r-1})^r occurs as a consecutive subword.
bool has_full_twist(const BraidWord& w, int r);

}  // namespace braidforge

#endif
