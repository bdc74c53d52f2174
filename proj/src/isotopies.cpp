#include "isotopies.hpp"

#include <string>

#include "errors.hpp"

namespace braidforge {

namespace {

std::string params_str(int p, int q, int r) {
  return "p=" + std::to_string(p) + " q=" + std::to_string(q) + " r=" + std::to_string(r);
}

std::string word_summary(const BraidWord& w) {
  return "width " + std::to_string(w.strands()) + ", crossings " +
         std::to_string(w.crossing_count());
}

void record(ConversionTrace* trace, const char* rule, int p, int q, int r, const BraidWord& out) {
  if (trace) trace->add(rule, params_str(p, q, r), word_summary(out));
}

// (s_{from} ... s_{to})^reps as a word at the given width, ascending or
// descending as from/to dictate; from == to gives a single letter per pass.
BraidWord run_block(int width, int from, int to, int reps) {
  std::vector<int> letters;
  int step = to >= from ? 1 : -1;
  for (int k = 0; k < reps; ++k)
    for (int i = from; i != to + step; i += step) letters.push_back(i);
  return BraidWord(width, std::move(letters));
}

void require(bool cond, const char* rule, const std::string& msg) {
  if (!cond) throw ValidationError(std::string(rule) + ": " + msg);
}

}  // namespace

BraidWord isotopy1(const BraidWord& beta, int p, int q, ConversionTrace* trace) {
  int r = beta.strands();
  require(q >= 1, "isotopy1", "need q >= 1");
  require(q <= r, "isotopy1", "need q <= r");
  require(r < p, "isotopy1", "need r < p");
  if (r == 1) {  // q = 1 forced; the torus tail vanishes at width 1
    record(trace, "isotopy1", p, q, r, beta);
    return beta;
  }
  BraidWord out(r);
  if (q == 1) {
    out = concat(beta, asc_block(r, r, 1));
  } else {
    out = concat(run_block(r, r - 1, r - q + 1, p - r), concat(beta, asc_block(r, r, q)));
  }
  record(trace, "isotopy1", p, q, r, out);
  return out;
}

BraidWord isotopy2(const BraidWord& beta, int p, int q, ConversionTrace* trace) {
  int r = beta.strands();
  require(q > 1, "isotopy2", "need q > 1");
  require(q <= r, "isotopy2", "need q <= r");
  require(r < p, "isotopy2", "need r < p");
  BraidWord out = concat(concat(beta, run_block(r, r - q + 1, r - 1, p - r)), desc_left_block(r, r, q));
  record(trace, "isotopy2", p, q, r, out);
  return out;
}

BraidWord isotopy3(const BraidWord& beta, int p, int q, ConversionTrace* trace) {
  int r = beta.strands();
  require(r > 1, "isotopy3", "need r > 1");
  require(r <= q, "isotopy3", "need r <= q");
  require(q < p, "isotopy3", "need q < p");
  BraidWord out = concat(desc_left_block(q, q, p - q), concat(embed(beta, q), asc_block(q, q, q)));
  record(trace, "isotopy3", p, q, r, out);
  return out;
}

BraidWord isotopy3_prime(const BraidWord& beta, int p, int q, ConversionTrace* trace) {
  int r = beta.strands();
  require(r > 1, "isotopy3_prime", "need r > 1");
  require(r <= q, "isotopy3_prime", "need r <= q");
  require(q < p, "isotopy3_prime", "need q < p");
  BraidWord out = concat(embed(beta, q), desc_left_block(q, q, p));
  record(trace, "isotopy3_prime", p, q, r, out);
  return out;
}

BraidWord isotopy4(const BraidWord& beta, int p, int q, ConversionTrace* trace) {
  int r = beta.strands();
  require(r > 1, "isotopy4", "need r > 1");
  require(r <= q, "isotopy4", "need r <= q");
  require(q < p, "isotopy4", "need q < p");
  BraidWord out =
      concat(embed(beta, q), concat(asc_block(q, q, p - q), desc_left_block(q, q, q)));
  record(trace, "isotopy4", p, q, r, out);
  return out;
}

BraidWord torus_closure_input(const BraidWord& beta, int p, int q) {
  return concat(embed(beta, p), asc_block(p, p, q));
}

BraidWord reversed_closure_input(const BraidWord& beta, int p, int q) {
  return concat(embed(beta, p), desc_left_block(p, p, q));
}

}  // namespace braidforge
