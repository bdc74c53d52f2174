#include "invariants.hpp"

#include <algorithm>
#include <vector>

#include "errors.hpp"

namespace braidforge {

namespace {

// Practical ceilings for the exact kernel; spec-sized workloads sit far below.
constexpr std::size_t kMaxAlexanderCrossings = 2000;
constexpr int kMaxAlexanderStrands = 121;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct ModField {
  u64 p;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 add(u64 a, u64 b) const {
    u64 r = a + b;
    return r >= p ? r - p : r;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a == 0) throw InternalError("modular inverse of zero");
    return pow(a, p - 2);
  }
};

constexpr u64 kPrimeA = 2305843009213693951ULL;  // 2^61 - 1
constexpr u64 kPrimeB = 999999999999999989ULL;

// Reduced Burau matrix of w evaluated at t, column-major m x m with
// m = strands - 1, then det(I - B) mod F.p.
u64 det_i_minus_burau_at(const BraidWord& w, u64 t, const ModField& F) {
  int m = w.strands() - 1;
  std::vector<std::vector<u64>> col(m, std::vector<u64>(m, 0));
  for (int j = 0; j < m; ++j) col[j][j] = 1;
  u64 one_minus_t = F.sub(1 % F.p, t);
  std::vector<u64> tmp(m);
  for (int letter : w.letters()) {
    if (letter < m) {
      int a = letter - 1, b = letter;  // generator touches columns a, a+1
      tmp = col[a];
      for (int i = 0; i < m; ++i) col[a][i] = F.add(F.mul(one_minus_t, tmp[i]), col[b][i]);
      for (int i = 0; i < m; ++i) col[b][i] = F.mul(t, tmp[i]);
    } else {
      // last generator: col_{m-1} <- -(col_0 + ... + col_{m-2}) - t col_{m-1}
      for (int i = 0; i < m; ++i) {
        u64 s = F.mul(t, col[m - 1][i]);
        for (int j = 0; j < m - 1; ++j) s = F.add(s, col[j][i]);
        tmp[i] = F.sub(0, s);
      }
      col[m - 1] = tmp;
    }
  }
  // a = I - B, row-major
  std::vector<std::vector<u64>> a(m, std::vector<u64>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      u64 v = F.sub(0, col[j][i]);
      if (i == j) v = F.add(v, 1);
      a[i][j] = v;
    }
  u64 det = 1;
  for (int c = 0; c < m; ++c) {
    int pivot = -1;
    for (int r = c; r < m; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = F.sub(0, det);
    }
    det = F.mul(det, a[c][c]);
    u64 ipiv = F.inv(a[c][c]);
    for (int r = c + 1; r < m; ++r) {
      if (a[r][c] == 0) continue;
      u64 f = F.mul(a[r][c], ipiv);
      for (int j = c; j < m; ++j) a[r][j] = F.sub(a[r][j], F.mul(f, a[c][j]));
    }
  }
  return det;
}

// Rigorous degree bound for det(I - B(w)): simulate per-column degree growth
// under the column operations, then sum column maxima.
int det_degree_bound(const BraidWord& w) {
  int m = w.strands() - 1;
  std::vector<long long> deg(m, 0);
  for (int letter : w.letters()) {
    if (letter < m) {
      int a = letter - 1, b = letter;
      long long da = std::max(deg[a] + 1, deg[b]);
      long long db = deg[a] + 1;
      deg[a] = da;
      deg[b] = db;
    } else {
      long long d = deg[m - 1] + 1;
      for (int j = 0; j < m - 1; ++j) d = std::max(d, deg[j]);
      deg[m - 1] = d;
    }
  }
  long long total = 0;
  for (long long d : deg) total += d;
  if (total > 1000000) throw ValidationError("alexander: degree bound too large");
  return static_cast<int>(total);
}

// Coefficients of det(I - B(w)) mod F.p by evaluation at 0..deg and Newton
// interpolation.
std::vector<u64> det_poly_mod(const BraidWord& w, int deg, const ModField& F) {
  int npts = deg + 1;
  std::vector<u64> dd(npts);
  for (int i = 0; i < npts; ++i) dd[i] = det_i_minus_burau_at(w, static_cast<u64>(i), F);
  // divided differences over x_i = i
  for (int j = 1; j < npts; ++j) {
    u64 ijinv = F.inv(static_cast<u64>(j));
    for (int i = npts - 1; i >= j; --i) dd[i] = F.mul(F.sub(dd[i], dd[i - 1]), ijinv);
  }
  // expand Newton form to monomial coefficients
  std::vector<u64> coef(npts, 0);
  for (int i = npts - 1; i >= 0; --i) {
    // coef <- coef * (x - i) + dd[i]
    u64 xi = static_cast<u64>(i) % F.p;
    for (int k = npts - 1; k >= 1; --k) coef[k] = F.sub(coef[k - 1], F.mul(xi, coef[k]));
    coef[0] = F.sub(dd[i], F.mul(xi, coef[0]));
  }
  return coef;
}

std::int64_t crt_lift(u64 ra, u64 rb) {
  static const ModField FB{kPrimeB};
  // x = ra + kPrimeA * t, t = (rb - ra) / kPrimeA (mod kPrimeB)
  u64 t = FB.mul(FB.sub(rb % kPrimeB, ra % kPrimeB), FB.inv(kPrimeA % kPrimeB));
  u128 x = static_cast<u128>(ra) + static_cast<u128>(kPrimeA) * t;
  u128 prod = static_cast<u128>(kPrimeA) * kPrimeB;
  bool neg = x > prod / 2;
  u128 mag = neg ? prod - x : x;
  if (mag > static_cast<u128>(INT64_MAX) - 8)
    throw InternalError("alexander: coefficient outside int64 range");
  std::int64_t v = static_cast<std::int64_t>(mag);
  return neg ? -v : v;
}

}  // namespace

LaurentPoly alexander(const BraidWord& w) {
  if (w.strands() == 1) return LaurentPoly(1);
  if (w.crossing_count() > kMaxAlexanderCrossings || w.strands() > kMaxAlexanderStrands)
    throw ValidationError("alexander: word beyond practical size (crossings " +
                          std::to_string(w.crossing_count()) + ", strands " +
                          std::to_string(w.strands()) + ")");
  int deg = det_degree_bound(w);
  std::vector<u64> ca = det_poly_mod(w, deg, ModField{kPrimeA});
  std::vector<u64> cb = det_poly_mod(w, deg, ModField{kPrimeB});
  LaurentPoly det;
  for (int e = 0; e <= deg; ++e) det.add_term(crt_lift(ca[e], cb[e]), e);
  LaurentPoly quotient = det.divide_exact(geometric_sum(w.strands()));
  return quotient.normalized();
}

std::optional<LaurentPoly> kauffman_jones(const BraidWord& w, int crossing_limit) {
  int c = static_cast<int>(w.crossing_count());
  if (c > crossing_limit || c > 30) return std::nullopt;
  int n = w.strands();

  // Resolve each crossing straight-through or cap-cup; count loops of the
  // closure with a tiny union-find over wire segments.
  std::vector<int> parent(n + c);
  std::vector<int> cur(n);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // bracket = sum over states A^{c-2h} delta^{loops-1}; bucket the counts.
  std::vector<std::vector<std::int64_t>> count(c + 1, std::vector<std::int64_t>(n + c + 1, 0));
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    int total = n;
    for (int i = 0; i < n; ++i) {
      parent[i] = i;
      cur[i] = i;
    }
    int h = 0;
    for (int k = 0; k < c; ++k) {
      int pos = w.letters()[k] - 1;
      if (state >> k & 1) {
        ++h;
        unite(cur[pos], cur[pos + 1]);
        parent[total] = total;
        cur[pos] = cur[pos + 1] = total++;
      }
    }
    for (int i = 0; i < n; ++i) unite(cur[i], i);
    int loops = 0;
    for (int i = 0; i < total; ++i)
      if (find(i) == i) ++loops;
    ++count[h][loops];
  }

  // delta = -A^2 - A^{-2}; precompute powers.
  LaurentPoly delta;
  delta.add_term(-1, 2);
  delta.add_term(-1, -2);
  std::vector<LaurentPoly> delta_pow(n + c + 1);
  delta_pow[0] = LaurentPoly(1);
  for (std::size_t k = 1; k < delta_pow.size(); ++k) delta_pow[k] = delta_pow[k - 1] * delta;

  LaurentPoly bracket;
  for (int h = 0; h <= c; ++h)
    for (int loops = 1; loops <= n + c; ++loops) {
      std::int64_t cnt = count[h][loops];
      if (cnt == 0) continue;
      bracket = bracket + delta_pow[loops - 1].shifted(cnt, c - 2 * h);
    }

  // writhe correction (-A)^{-3c}, then x = t^{1/2} via exponent halving with
  // the mirror fixed so positive words land on negative exponents.
  LaurentPoly f = bracket.shifted((c % 2 == 0) ? 1 : -1, -3 * c);
  LaurentPoly jones;
  for (auto [e, coeff] : f.terms()) {
    if (e % 2 != 0) throw InternalError("jones: odd bracket exponent");
    jones.add_term(coeff, e / 2);
  }
  return jones;
}

InvariantProfile profile(const BraidWord& w, int jones_limit) {
  InvariantProfile p{};
  p.components = components(w);
  p.euler_char = euler_char(w);
  p.crossings = static_cast<std::int64_t>(w.crossing_count());
  p.strands = w.strands();
  p.alexander = alexander(w);
  p.jones = kauffman_jones(w, jones_limit);
  return p;
}

ConsistencyReport consistent(const InvariantProfile& a, const InvariantProfile& b) {
  if (a.components != b.components) return {false, "components"};
  if (a.alexander != b.alexander) return {false, "alexander"};
  if (a.euler_char != b.euler_char) return {false, "euler_char"};
  if (a.jones && b.jones && *a.jones != *b.jones) return {false, "jones"};
  return {true, ""};
}

}  // namespace braidforge
