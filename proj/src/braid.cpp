#include "braid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace braidforge {

namespace {

void check_width(int strands) {
  if (strands < 1) throw ValidationError("strand count must be >= 1, got " + std::to_string(strands));
}

// Letters from..to inclusive (step +-1), the whole run repeated reps times.
std::vector<int> ramp(int from, int to, int reps) {
  std::vector<int> out;
  int run = std::abs(to - from) + 1;
  if (static_cast<long long>(run) * reps > 10000000)
    throw ValidationError("braid word too large (" + std::to_string(static_cast<long long>(run) * reps) +
                          " letters in one block)");
  out.reserve(static_cast<std::size_t>(run) * reps);
  int step = to >= from ? 1 : -1;
  for (int k = 0; k < reps; ++k)
    for (int i = from; i != to + step; i += step) out.push_back(i);
  return out;
}

void check_block(int strands, int r, int s, const char* what) {
  check_width(strands);
  if (r < 2 || r > strands)
    throw ValidationError(std::string(what) + ": width parameter " + std::to_string(r) +
                          " out of range [2, " + std::to_string(strands) + "]");
  if (s < 0) throw ValidationError(std::string(what) + ": exponent must be >= 0");
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_width(strands); }

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_width(strands);
  for (int l : letters_)
    if (l < 1 || l > strands_ - 1)
      throw ValidationError("letter " + std::to_string(l) + " out of range [1, " +
                            std::to_string(strands_ - 1) + "]");
}

int StrandPermutation::cycle_count() const {
  int n = static_cast<int>(image.size());
  std::vector<char> seen(n + 1, 0);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = image[j - 1]) seen[j] = 1;
  }
  return cycles;
}

BraidWord asc_block(int strands, int r, int s) {
  check_block(strands, r, s, "asc_block");
  return BraidWord(strands, ramp(1, r - 1, s));
}

BraidWord desc_right_block(int strands, int u, int v) {
  check_block(strands, u, v, "desc_right_block");
  return BraidWord(strands, ramp(strands - 1, strands - u + 1, v));
}

BraidWord desc_left_block(int strands, int r, int s) {
  check_block(strands, r, s, "desc_left_block");
  return BraidWord(strands, ramp(r - 1, 1, s));
}

BraidWord asc_right_block(int strands, int u, int v) {
  check_block(strands, u, v, "asc_right_block");
  return BraidWord(strands, ramp(1, u - 1, v));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw ValidationError("concat: strand counts differ (" + std::to_string(a.strands()) + " vs " +
                          std::to_string(b.strands()) + ")");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord rotate180(const BraidWord& w) {
  std::vector<int> letters;
  letters.reserve(w.letters().size());
  for (int l : w.letters()) letters.push_back(w.strands() - l);
  return BraidWord(w.strands(), std::move(letters));
}

StrandPermutation permutation(const BraidWord& w) {
  // occupant[j] = input strand currently sitting at position j+1.
  std::vector<int> occupant(w.strands());
  std::iota(occupant.begin(), occupant.end(), 1);
  for (int l : w.letters()) std::swap(occupant[l - 1], occupant[l]);
  StrandPermutation p;
  p.image.resize(w.strands());
  for (int j = 0; j < w.strands(); ++j) p.image[occupant[j] - 1] = j + 1;
  return p;
}

int components(const BraidWord& w) { return permutation(w).cycle_count(); }

BraidWord embed(const BraidWord& w, int strands) {
  if (strands < w.strands())
    throw ValidationError("embed: target width " + std::to_string(strands) + " below word width " +
                          std::to_string(w.strands()));
  return BraidWord(strands, w.letters());
}

BraidWord destabilize_right(const BraidWord& w) {
  int n = w.strands();
  if (n < 2) throw NotDestabilizable("word is already on one strand");
  int top = n - 1;
  std::size_t count = 0, at = 0;
  for (std::size_t i = 0; i < w.letters().size(); ++i)
    if (w.letters()[i] == top) {
      ++count;
      at = i;
    }
  if (count != 1)
    throw NotDestabilizable("sigma_" + std::to_string(top) + " occurs " + std::to_string(count) +
                            " times, need exactly 1");
  // The sole sigma_{n-1} must commute to the word's end: everything after it
  // must keep distance >= 2.
  for (std::size_t i = at + 1; i < w.letters().size(); ++i)
    if (w.letters()[i] >= top - 1)
      throw NotDestabilizable("sigma_" + std::to_string(top) + " blocked by sigma_" +
                              std::to_string(w.letters()[i]));
  std::vector<int> letters;
  letters.reserve(w.letters().size() - 1);
  for (std::size_t i = 0; i < w.letters().size(); ++i)
    if (i != at) letters.push_back(w.letters()[i]);
  return BraidWord(n - 1, std::move(letters));
}

std::int64_t euler_char(const BraidWord& w) {
  return static_cast<std::int64_t>(w.strands()) - static_cast<std::int64_t>(w.crossing_count());
}

bool has_full_twist(const BraidWord& w, int r) {
  if (r < 1 || r > w.strands())
    throw ValidationError("has_full_twist: width " + std::to_string(r) + " out of range");
  if (r == 1) return true;
  std::vector<int> target = ramp(1, r - 1, r);
  const auto& hay = w.letters();
  if (hay.size() < target.size()) return false;
  auto it = std::search(hay.begin(), hay.end(), target.begin(), target.end());
  return it != hay.end();
}

}  // namespace braidforge
