#include "laurent.hpp"

#include "errors.hpp"

namespace braidforge {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("int64 overflow in add");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("int64 overflow in mul");
  return r;
}

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) coeffs_[0] = c;
}

LaurentPoly LaurentPoly::term(std::int64_t coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exp] = coeff;
  return p;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::lowest_exp() const {
  if (coeffs_.empty()) throw InternalError("lowest_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::highest_exp() const {
  if (coeffs_.empty()) throw InternalError("highest_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(std::int64_t coeff, int exp) {
  if (coeff == 0) return;
  auto [it, fresh] = coeffs_.try_emplace(exp, coeff);
  if (!fresh) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, c] : o.coeffs_) r.add_term(c, e);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, c] : o.coeffs_) r.add_term(checked_mul(c, -1), e);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto [e, c] : coeffs_) r.coeffs_[e] = checked_mul(c, -1);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, c1] : coeffs_)
    for (auto [e2, c2] : o.coeffs_) r.add_term(checked_mul(c1, c2), e1 + e2);
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t coeff, int exp) const {
  LaurentPoly r;
  if (coeff == 0) return r;
  for (auto [e, c] : coeffs_) r.coeffs_[e + exp] = checked_mul(c, coeff);
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  int dhi = divisor.highest_exp();
  std::int64_t dlead = divisor.coeff(dhi);
  int lo_bound = lowest_exp() - divisor.lowest_exp();
  while (!rem.is_zero()) {
    int rhi = rem.highest_exp();
    std::int64_t rlead = rem.coeff(rhi);
    if (rlead % dlead != 0) throw InternalError("inexact polynomial division (leading coeff)");
    std::int64_t q = rlead / dlead;
    int shift = rhi - dhi;
    if (shift < lo_bound) throw InternalError("inexact polynomial division (remainder)");
    quot.add_term(q, shift);
    rem = rem - divisor.shifted(q, shift);
    if (!rem.is_zero() && rem.highest_exp() >= rhi)
      throw InternalError("polynomial division failed to reduce degree");
  }
  return quot;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  int lo = lowest_exp();
  std::int64_t sign = coeffs_.begin()->second < 0 ? -1 : 1;
  return shifted(sign, -lo);
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::terms() const {
  return {coeffs_.begin(), coeffs_.end()};
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool show_coeff = mag != 1 || e == 0;
    if (show_coeff) out += std::to_string(mag);
    if (e != 0) {
      if (show_coeff) out += "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly geometric_sum(int n) {
  LaurentPoly p;
  for (int i = 0; i < n; ++i) p.add_term(1, i);
  return p;
}

}  // namespace braidforge
