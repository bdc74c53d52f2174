#ifndef BRAIDFORGE_ISOTOPIES_HPP
#define BRAIDFORGE_ISOTOPIES_HPP

#include "braid.hpp"
#include "trace.hpp"

namespace braidforge {

// Closure-preserving rewrites that trade a torus tail on p strands for blocks
// on fewer strands. beta always lives on its own strand count r; the rewrites
// return the replacement word at the reduced width. Preconditions throw
// ValidationError.
//
// Words whose closures match:
//   isotopy1/3/3p: beta (widened to p) followed by (s1 s2 ... s{p-1})^q
//   isotopy2/4:    beta (widened to p) followed by (s{p-1} ... s1)^q

// 0 < q <= r < p. Result on r strands:
//   q > 1: (s{r-1}...(s{r-q+1})^{p-r} beta (s1...s{r-1})^q
//   q = 1: beta (s1...s{r-1})
BraidWord isotopy1(const BraidWord& beta, int p, int q, ConversionTrace* trace = nullptr);

// 1 < q <= r < p. Result on r strands:
//   beta (s{r-q+1}...s{r-1})^{p-r} (s{r-1}...s1)^q
BraidWord isotopy2(const BraidWord& beta, int p, int q, ConversionTrace* trace = nullptr);

// 1 < r <= q < p. Result on q strands:
//   (s{q-1}...s1)^{p-q} beta (s1...s{q-1})^q
BraidWord isotopy3(const BraidWord& beta, int p, int q, ConversionTrace* trace = nullptr);

// 1 < r <= q < p. Result on q strands:
//   beta (s{q-1}...s1)^p
BraidWord isotopy3_prime(const BraidWord& beta, int p, int q, ConversionTrace* trace = nullptr);

// 1 < r <= q < p. Result on q strands:
//   beta (s1...s{q-1})^{p-q} (s{q-1}...s1)^q
BraidWord isotopy4(const BraidWord& beta, int p, int q, ConversionTrace* trace = nullptr);

// The words the rewrites start from, for oracle comparisons.
BraidWord torus_closure_input(const BraidWord& beta, int p, int q);
BraidWord reversed_closure_input(const BraidWord& beta, int p, int q);

}  // namespace braidforge

#endif
