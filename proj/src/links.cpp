#include "links.hpp"

#include <string>

#include "errors.hpp"

namespace braidforge {

namespace {

std::string block_str(const Block& b) {
  return "(" + std::to_string(b.r) + "," + std::to_string(b.s) + ")";
}

void check_strictly_increasing(const std::vector<Block>& blocks, const char* side) {
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i].r >= blocks[i + 1].r)
      throw ValidationError(std::string(side) + " block widths must strictly increase: " +
                            block_str(blocks[i]) + " then " + block_str(blocks[i + 1]));
}

void check_block_ranges(const std::vector<Block>& blocks, const char* side) {
  for (const Block& b : blocks) {
    if (b.r < 2) throw ValidationError(std::string(side) + " block width must be >= 2: " + block_str(b));
    if (b.s < 1) throw ValidationError(std::string(side) + " block exponent must be >= 1: " + block_str(b));
  }
}

}  // namespace

void validate(const TLinkSpec& t) {
  if (t.blocks.empty()) throw EmptyLink("T-spec has no blocks");
  check_block_ranges(t.blocks, "T");
  check_strictly_increasing(t.blocks, "T");
}

void validate(const VLinkSpec& v) {
  int p = v.torus.r, q = v.torus.s;
  if (p < 1) throw ValidationError("torus width must be >= 1, got " + std::to_string(p));
  if (p == 1 && !(v.rev.empty() && v.plain.empty()))
    throw ValidationError("torus width 1 allowed only without side blocks");
  if (q < 1) throw ValidationError("torus exponent must be >= 1, got " + std::to_string(q));
  if (q < p)
    throw ValidationError("torus exponent " + std::to_string(q) + " below width " + std::to_string(p));
  check_block_ranges(v.rev, "rev");
  check_strictly_increasing(v.rev, "rev");
  check_block_ranges(v.plain, "plain");
  check_strictly_increasing(v.plain, "plain");
  if (!v.rev.empty() && v.rev.back().r > p)
    throw ValidationError("rev block width " + std::to_string(v.rev.back().r) +
                          " exceeds torus width " + std::to_string(p));
  if (!v.plain.empty() && v.plain.back().r >= p)
    throw ValidationError("plain block width " + std::to_string(v.plain.back().r) +
                          " must stay below torus width " + std::to_string(p));
}

TLinkSpec normalize_t(const TLinkSpec& raw) {
  for (const Block& b : raw.blocks) {
    if (b.r < 2) throw ValidationError("T block width must be >= 2: " + block_str(b));
    if (b.s < 0) throw ValidationError("T block exponent must be >= 0: " + block_str(b));
  }
  TLinkSpec out;
  for (const Block& b : raw.blocks) {
    if (b.s == 0) continue;
    if (!out.blocks.empty() && out.blocks.back().r == b.r)
      out.blocks.back().s += b.s;
    else
      out.blocks.push_back(b);
  }
  if (out.blocks.empty()) throw EmptyLink("T-spec is empty after normalization");
  check_strictly_increasing(out.blocks, "T");
  // A trailing exponent-1 block is a pure stabilization of the previous one.
  if (out.blocks.size() >= 2 && out.blocks.back().s == 1) {
    out.blocks.pop_back();
    out.blocks.back().s += 1;
  }
  return out;
}

bool is_normalized(const TLinkSpec& t) {
  try {
    return normalize_t(t) == t;
  } catch (const ValidationError&) {
    return false;
  }
}

BraidWord braid_of_t(const TLinkSpec& t) {
  validate(t);
  int width = t.blocks.back().r;
  BraidWord w(width);
  for (const Block& b : t.blocks) w = concat(w, asc_block(width, b.r, b.s));
  return w;
}

BraidWord braid_of_v(const VLinkSpec& v) {
  validate(v);
  int p = v.torus.r;
  if (p == 1) return BraidWord(1);
  BraidWord w(p);
  for (const Block& b : v.rev) w = concat(w, desc_right_block(p, b.r, b.s));
  for (const Block& b : v.plain) w = concat(w, asc_block(p, b.r, b.s));
  return concat(w, asc_block(p, p, v.torus.s));
}

bool is_knot(const TLinkSpec& t) { return components(braid_of_t(t)) == 1; }

bool is_knot(const VLinkSpec& v) { return components(braid_of_v(v)) == 1; }

TorusExponent split_torus_exponent(const VLinkSpec& v) {
  int p = v.torus.r, q_total = v.torus.s;
  if (p < 1) throw ValidationError("torus width must be >= 1");
  if (p == 1 || q_total % p == 0) return {0, 0};
  return {q_total / p, q_total % p};
}

}  // namespace braidforge
