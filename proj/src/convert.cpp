#include "convert.hpp"

#include <string>

#include "errors.hpp"
#include "spec_text.hpp"

namespace braidforge {

namespace {

// Raw block-list cleanup for assembled T forms: drop blocks that contribute no
// crossings (width 1 or exponent 0), then apply the usual normalization. An
// empty result can only come from unknot degenerates; canonicalize those to
// T((2,1)), whose closure is the same unknot.
TLinkSpec tidy_t(std::vector<Block> blocks) {
  std::vector<Block> kept;
  for (const Block& b : blocks)
    if (b.r >= 2 && b.s >= 1) kept.push_back(b);
  if (kept.empty()) return TLinkSpec{{Block{2, 1}}};
  return normalize_t(TLinkSpec{std::move(kept)});
}

}  // namespace

TToVResult t_to_v(const TLinkSpec& t) {
  if (!is_normalized(t)) throw ValidationError("t_to_v requires a normalized T-spec");
  TToVResult res;
  const std::vector<Block>& blocks = t.blocks;
  int n = static_cast<int>(blocks.size());

  auto r_at = [&](int idx) { return idx >= 1 ? blocks[idx - 1].r : 0; };  // r_0 := 0

  long long sum = 0;  // S_i = s_n + ... + s_{n-i}
  for (int i = 0; i <= n - 1; ++i) {
    sum += blocks[n - 1 - i].s;
    if (sum > 100000000) throw ValidationError("t_to_v: exponent sum too large");
    std::string params = "i=" + std::to_string(i) + " S=" + std::to_string(sum);
    if (sum >= r_at(n - i)) {
      // Absorb: the top i blocks become reversed blocks of accumulated width,
      // the pivot block's torus power takes the whole partial sum.
      VLinkSpec v{};
      long long acc = blocks[n - 1].s;
      for (int k = 1; k <= i; ++k) {
        v.rev.push_back(Block{static_cast<int>(acc), blocks[n - k].r - blocks[n - k - 1].r});
        acc += blocks[n - 1 - k].s;
      }
      for (int k = 0; k < n - i - 1; ++k) v.plain.push_back(blocks[k]);
      v.torus = Block{r_at(n - i), static_cast<int>(sum)};
      res.trace.i_bar = i;
      res.trace.add("torus_absorb", params + " pivot_r=" + std::to_string(r_at(n - i)), format(v));
      res.v = v;
      validate(res.v);
      return res;
    }
    if (sum >= r_at(n - i - 1)) {
      // Swap: remaining leading blocks flip to reversed form, the accumulated
      // widths stay plain, torus transposes to (S_i, r_{n-i}).
      VLinkSpec v{};
      for (int k = 0; k < n - i - 1; ++k) v.rev.push_back(blocks[k]);
      long long acc = blocks[n - 1].s;
      for (int k = 1; k <= i; ++k) {
        v.plain.push_back(Block{static_cast<int>(acc), blocks[n - k].r - blocks[n - k - 1].r});
        acc += blocks[n - 1 - k].s;
      }
      v.torus = Block{static_cast<int>(sum), r_at(n - i)};
      res.trace.i_bar = i;
      res.trace.add("torus_swap", params + " pivot_r=" + std::to_string(r_at(n - i)), format(v));
      res.v = v;
      validate(res.v);
      return res;
    }
  }
  throw InternalError("t_to_v scan failed to terminate (r_0 = 0 should force the last step)");
}

VToTResult v_to_t(const VLinkSpec& v) {
  validate(v);
  int p = v.torus.r, q = v.torus.s;
  int m = static_cast<int>(v.rev.size());
  int n = static_cast<int>(v.plain.size());

  VToTResult res;

  // First form: plain blocks stay; the torus pays out u_m, then the reversed
  // blocks unwind above the torus width, widest first.
  {
    std::vector<Block> blocks = v.plain;
    int u_m = m > 0 ? v.rev[m - 1].r : 0;
    blocks.push_back(Block{p, q - u_m});
    int width = p;
    for (int x = m - 1; x >= 0; --x) {
      width += v.rev[x].s;
      int prev_u = x > 0 ? v.rev[x - 1].r : 0;
      blocks.push_back(Block{width, v.rev[x].r - prev_u});
    }
    res.first = tidy_t(std::move(blocks));
  }

  // Second form: reversed blocks become the leading plain blocks; the torus
  // transposes and then pays out the plain widths, widest first.
  {
    std::vector<Block> blocks = v.rev;
    int r_n = n > 0 ? v.plain[n - 1].r : 0;
    blocks.push_back(Block{q, p - r_n});
    int width = q;
    for (int t = n - 1; t >= 0; --t) {
      width += v.plain[t].s;
      int prev_r = t > 0 ? v.plain[t - 1].r : 0;
      blocks.push_back(Block{width, v.plain[t].r - prev_r});
    }
    res.second = tidy_t(std::move(blocks));
  }

  return res;
}

DualResult dual_t(const TLinkSpec& t) {
  TLinkSpec norm = normalize_t(t);
  VToTResult forms = v_to_t(t_to_v(norm).v);
  if (forms.first != norm) return {forms.first, false};
  if (forms.second != norm) return {forms.second, false};
  return {norm, true};
}

BraidWord minimal_braid(const TLinkSpec& t) { return braid_of_v(t_to_v(t).v); }

}  // namespace braidforge
