#include "classify.hpp"

#include <numeric>

#include "convert.hpp"
#include "errors.hpp"
#include "spec_text.hpp"

namespace braidforge {

const char* to_string(SatRule r) { return r == SatRule::S1 ? "S1" : "S2"; }

const char* to_string(HypRule r) {
  switch (r) {
    case HypRule::H1: return "H1";
    case HypRule::H2: return "H2";
    case HypRule::H3: return "H3";
    case HypRule::B1: return "B1";
    case HypRule::B2: return "B2";
    case HypRule::B3: return "B3";
  }
  return "?";
}

const char* to_string(LinkKind k) {
  switch (k) {
    case LinkKind::Torus: return "torus";
    case LinkKind::Satellite: return "satellite";
    case LinkKind::Hyperbolic: return "hyperbolic";
    case LinkKind::Unknown: return "unknown";
  }
  return "?";
}

namespace {

bool multiple_and_greater(long long x, int d) { return x > d && x % d == 0; }

// Merge adjacent equal-width blocks; inputs are width-sorted by construction.
std::vector<Block> merge_blocks(std::vector<Block> blocks) {
  std::vector<Block> out;
  for (const Block& b : blocks) {
    if (b.s == 0) continue;
    if (!out.empty() && out.back().r == b.r)
      out.back().s += b.s;
    else
      out.push_back(b);
  }
  return out;
}

std::optional<SatelliteWitness> try_case_one_degree(const VLinkSpec& v, int d) {
  int p = v.torus.r, q = v.torus.s;
  if (!multiple_and_greater(p, d) || !multiple_and_greater(q, d)) return std::nullopt;
  int n = static_cast<int>(v.plain.size());
  int m = static_cast<int>(v.rev.size());
  int i = 0;
  while (i < n && v.plain[i].r <= d) ++i;
  int j = 0;
  while (j < m && v.rev[j].r <= d) ++j;
  for (int t = i; t < n; ++t)
    if (!multiple_and_greater(v.plain[t].r, d) || !multiple_and_greater(v.plain[t].s, d))
      return std::nullopt;
  for (int x = j; x < m; ++x)
    if (!multiple_and_greater(v.rev[x].r, d) || !multiple_and_greater(v.rev[x].s, d))
      return std::nullopt;

  SatelliteWitness w;
  w.rule = SatRule::S1;
  w.d = d;
  for (int x = j; x < m; ++x) w.companion.rev.push_back(Block{v.rev[x].r / d, v.rev[x].s / d});
  for (int t = i; t < n; ++t) w.companion.plain.push_back(Block{v.plain[t].r / d, v.plain[t].s / d});
  w.companion.torus = Block{p / d, q / d};
  validate(w.companion);

  long long total = static_cast<long long>(p) * q;
  for (int t = i; t < n; ++t) total += static_cast<long long>(v.plain[t].r) * v.plain[t].s;
  for (int x = j; x < m; ++x) total += static_cast<long long>(v.rev[x].r) * v.rev[x].s;
  long long dd = static_cast<long long>(d) * d;
  if (total % dd != 0) throw InternalError("cabling multiplier not an integer");
  w.eta = total / dd;

  w.companion_is_knot = is_knot(w.companion);
  if (w.companion_is_knot) {
    // Pattern: the prefix blocks at width d plus d*eta torus rounds; a prefix
    // block of width exactly d folds into the torus exponent.
    VLinkSpec pat;
    for (int x = 0; x < j; ++x) pat.rev.push_back(v.rev[x]);
    long long torus_exp = w.eta * d;
    int keep = i;
    if (i > 0 && v.plain[i - 1].r == d) {
      torus_exp += v.plain[i - 1].s;
      keep = i - 1;
    }
    for (int t = 0; t < keep; ++t) pat.plain.push_back(v.plain[t]);
    if (torus_exp > 1000000000) throw ValidationError("pattern torus exponent too large");
    pat.torus = Block{d, static_cast<int>(torus_exp)};
    validate(pat);
    w.pattern_spec = pat;
    w.pattern = braid_of_v(pat);
  }
  return w;
}

}  // namespace

std::optional<SatelliteWitness> satellite_case_one(const VLinkSpec& v) {
  validate(v);
  int g = std::gcd(v.torus.r, v.torus.s);
  for (int d = 2; d <= g; ++d) {
    if (g % d != 0) continue;
    if (auto w = try_case_one_degree(v, d)) return w;
  }
  return std::nullopt;
}

std::optional<SatelliteWitness> satellite_case_two(const VLinkSpec& v) {
  validate(v);
  int p = v.torus.r, q_total = v.torus.s;
  int n = static_cast<int>(v.plain.size());
  int m = static_cast<int>(v.rev.size());
  for (int q_small = 2; q_small < p; ++q_small) {
    if (p % q_small != 0) continue;
    int a = p / q_small;
    if (a <= 1) continue;
    int c = q_total % q_small;
    if (c == 0) continue;
    int b = q_total / q_small;
    if (b < 1) continue;
    int d = q_small - c;
    if (m > 0 && v.rev[m - 1].r > c) continue;
    int i = 0;
    while (i < n && v.plain[i].r <= d) ++i;
    if (i >= n) continue;  // need suffix exponents to pay out the split width
    long long suffix_s = 0;
    for (int t = i; t < n; ++t) suffix_s += v.plain[t].s;
    if (suffix_s != d) continue;
    if (v.plain[i].r < p - c) continue;

    SatelliteWitness w;
    w.rule = SatRule::S2;
    w.a = a;
    w.b = b;
    w.c = c;
    w.q_small = q_small;
    w.d = d;
    w.companion = VLinkSpec{{}, {}, Block{a, b + 1}};
    validate(w.companion);
    w.companion_is_knot = is_knot(w.companion);
    if (w.companion_is_knot) {
      VLinkSpec pat;
      pat.rev = v.rev;
      std::vector<Block> plain;
      for (int t = 0; t < i; ++t) plain.push_back(v.plain[t]);
      if (d >= 2) plain.push_back(Block{d, d});
      pat.plain = merge_blocks(std::move(plain));
      long long torus_exp =
          static_cast<long long>(q_small) * (b + static_cast<long long>(a - 1) * (b + 1)) + c;
      if (torus_exp > 1000000000) throw ValidationError("pattern torus exponent too large");
      pat.torus = Block{q_small, static_cast<int>(torus_exp)};
      validate(pat);
      w.pattern_spec = pat;
      w.pattern = braid_of_v(pat);
    }
    return w;
  }
  return std::nullopt;
}

std::optional<HyperbolicWitness> hyp_rule_1(const VLinkSpec& v) {
  validate(v);
  if (!is_knot(v)) return std::nullopt;
  TorusExponent te = split_torus_exponent(v);
  if (te.q_prime == 0 || te.k < 1) return std::nullopt;
  int p = v.torus.r;
  int n = static_cast<int>(v.plain.size());
  int m = static_cast<int>(v.rev.size());
  if (n + m < 1) return std::nullopt;
  if (n > 0 && v.plain[n - 1].r > te.q_prime) return std::nullopt;
  if (m > 0 && v.rev[m - 1].r > te.q_prime) return std::nullopt;
  if (std::gcd(p, te.q_prime) != 1) return std::nullopt;
  return HyperbolicWitness{HypRule::H1, te.k, te.q_prime, std::nullopt};
}

std::optional<HyperbolicWitness> hyp_rule_2(const VLinkSpec& v) {
  validate(v);
  if (!is_knot(v)) return std::nullopt;
  TorusExponent te = split_torus_exponent(v);
  if (te.q_prime == 0 || te.k < 1) return std::nullopt;
  int p = v.torus.r;
  int g = std::gcd(p, te.q_prime);
  if (g <= 1) return std::nullopt;
  int n = static_cast<int>(v.plain.size());
  int m = static_cast<int>(v.rev.size());
  if (m == 0 && n > 0) {
    const Block& last = v.plain[n - 1];
    if (last.r < te.q_prime && last.s >= last.r && last.r > g &&
        std::gcd(g, last.r) == 1)
      return HyperbolicWitness{HypRule::H2, te.k, te.q_prime, std::nullopt};
  }
  if (n == 0 && m > 0) {
    const Block& last = v.rev[m - 1];
    if (last.r < te.q_prime && last.s >= last.r && last.r > g &&
        std::gcd(g, last.r) == 1)
      return HyperbolicWitness{HypRule::H2, te.k, te.q_prime, std::nullopt};
  }
  return std::nullopt;
}

std::optional<HyperbolicWitness> hyp_rule_3(const VLinkSpec& v) {
  validate(v);
  if (!is_knot(v)) return std::nullopt;
  TorusExponent te = split_torus_exponent(v);
  if (te.q_prime == 0 || te.k < 1) return std::nullopt;
  int p = v.torus.r;
  int qp = te.q_prime;
  if (std::gcd(p, qp) != 1) return std::nullopt;
  int n = static_cast<int>(v.plain.size());
  int m = static_cast<int>(v.rev.size());
  long long cs = 0;  // side-braid crossing count
  for (const Block& bl : v.plain) cs += static_cast<long long>(bl.r - 1) * bl.s;
  for (const Block& bl : v.rev) cs += static_cast<long long>(bl.r - 1) * bl.s;
  int r_n = n > 0 ? v.plain[n - 1].r : 0;
  int s_n = n > 0 ? v.plain[n - 1].s : 0;
  int u_m = m > 0 ? v.rev[m - 1].r : 0;
  int v_m = m > 0 ? v.rev[m - 1].s : 0;
  if (n > 0 && s_n >= r_n && r_n > qp && qp >= u_m && p - r_n >= qp && p % r_n != 0 &&
      (std::gcd(r_n, qp) == 1 || std::gcd(p, r_n) == 1) &&
      cs != static_cast<long long>(p - 1) * (r_n - qp))
    return HyperbolicWitness{HypRule::H3, te.k, qp, cs};
  if (m > 0 && v_m >= u_m && u_m > qp && qp >= r_n && p - u_m >= qp && p % u_m != 0 &&
      (std::gcd(u_m, qp) == 1 || std::gcd(p, u_m) == 1) &&
      cs != static_cast<long long>(p - 1) * (u_m - qp))
    return HyperbolicWitness{HypRule::H3, te.k, qp, cs};
  return std::nullopt;
}

std::optional<HyperbolicWitness> braid_hyp_thm(const BraidWord& beta, int p, int q, int k,
                                               HypRule which) {
  if (which != HypRule::B1 && which != HypRule::B2 && which != HypRule::B3)
    throw ValidationError("braid_hyp_thm: rule must be B1, B2, or B3");
  int r = beta.strands();
  if (p < 2 || q < 1 || k < 1 || r > p) return std::nullopt;
  long long exp = static_cast<long long>(q) + static_cast<long long>(p) * k;
  if (exp > 1000000000) throw ValidationError("torus exponent too large");
  BraidWord closure_input = concat(embed(beta, p), asc_block(p, p, static_cast<int>(exp)));
  if (components(closure_input) != 1) return std::nullopt;

  int g = std::gcd(p, q);
  switch (which) {
    case HypRule::B1:
      if (p > q && q >= r && r > 1 && g == 1 && beta.crossing_count() > 0)
        return HyperbolicWitness{HypRule::B1, k, q, std::nullopt};
      return std::nullopt;
    case HypRule::B2:
      if (p > q && q > r && r > g && g > 1 && std::gcd(r, p) == 1 && std::gcd(r, q) == 1 &&
          has_full_twist(beta, r))
        return HyperbolicWitness{HypRule::B2, k, q, std::nullopt};
      return std::nullopt;
    default:
      if (p > r && r > q && p - r >= q && p % r != 0 &&
          (std::gcd(r, q) == 1 || g == 1 || std::gcd(p, r) == 1) && has_full_twist(beta, r) &&
          static_cast<long long>(beta.crossing_count()) !=
              static_cast<long long>(p - 1) * (r - q))
        return HyperbolicWitness{HypRule::B3, k, q,
                                 static_cast<long long>(beta.crossing_count())};
      return std::nullopt;
  }
}

GeometricVerdict classify_v(const VLinkSpec& v) {
  validate(v);
  GeometricVerdict verdict;
  if (v.rev.empty() && v.plain.empty()) {
    verdict.kind = LinkKind::Torus;
    verdict.notes.push_back("no side blocks: closure is the torus link (" +
                            std::to_string(v.torus.r) + "," + std::to_string(v.torus.s) + ")");
    return verdict;
  }
  if (auto w = satellite_case_one(v)) verdict.satellites.push_back(*w);
  if (auto w = satellite_case_two(v)) verdict.satellites.push_back(*w);
  if (is_knot(v)) {
    if (auto w = hyp_rule_1(v)) verdict.hyperbolics.push_back(*w);
    if (auto w = hyp_rule_2(v)) verdict.hyperbolics.push_back(*w);
    if (auto w = hyp_rule_3(v)) {
      verdict.hyperbolics.push_back(*w);
      verdict.notes.push_back(
          "H3 crossing sum counts side-braid crossings: sum (r-1)s over plain plus (u-1)v over "
          "reversed blocks");
    }
  }
  if (!verdict.satellites.empty() && !verdict.hyperbolics.empty())
    throw InternalError("spec " + format(v) +
                        " received both satellite and hyperbolic witnesses");
  if (!verdict.satellites.empty())
    verdict.kind = LinkKind::Satellite;
  else if (!verdict.hyperbolics.empty())
    verdict.kind = LinkKind::Hyperbolic;
  else
    verdict.kind = LinkKind::Unknown;
  return verdict;
}

TClassification classify_t(const TLinkSpec& t) {
  TClassification out;
  TToVResult conv = t_to_v(normalize_t(t));
  out.v = conv.v;
  out.trace = conv.trace;
  out.verdict = classify_v(conv.v);
  return out;
}

}  // namespace braidforge
