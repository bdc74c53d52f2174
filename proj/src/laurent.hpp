#ifndef BRAIDFORGE_LAURENT_HPP
#define BRAIDFORGE_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidforge {

// Laurent polynomial in one variable with exact int64 coefficients. All
// arithmetic is overflow-checked; a coefficient that would leave int64 range
// throws instead of wrapping.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t c);
  static LaurentPoly term(std::int64_t coeff, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int exp) const;
  int lowest_exp() const;   // throws on zero
  int highest_exp() const;  // throws on zero

  void add_term(std::int64_t coeff, int exp);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiply by coeff * x^exp.
  LaurentPoly shifted(std::int64_t coeff, int exp) const;

  // Exact division; throws InternalError if the divisor does not divide evenly.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Unit-normalize: shift so the lowest exponent is 0 and its coefficient is
  // positive. Zero stays zero.
  LaurentPoly normalized() const;

  // Sorted (exp, coeff) pairs, ascending exponent.
  std::vector<std::pair<int, std::int64_t>> terms() const;

  // e.g. "t^2 - t + 1"; zero prints "0". var names the variable.
  std::string str(const std::string& var = "t") const;

private:
  std::map<int, std::int64_t> coeffs_;  // exp -> nonzero coeff
};

// 1 + x + ... + x^{n-1}.
LaurentPoly geometric_sum(int n);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace braidforge

#endif
