#pragma once

#include "qfp/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace qfp {

/// Dense univariate polynomial in q with Integer coefficients.
///
/// coeffs()[i] is the coefficient of q^i. The stored sequence never ends in a
/// zero coefficient; the zero polynomial stores nothing and reports
/// kZeroDegree as its degree.
class Polynomial {
 public:
  static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Integer& c);
  // c * q^exponent
  static Polynomial monomial(const Integer& c, std::size_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  // Coefficient of q^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  // Requires a nonzero polynomial.
  const Integer& leading() const;

  bool all_coefficients_nonnegative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  /// In-place accumulate: *this += sign * q^shift * other. sign is +1 or -1.
  Polynomial& add_shifted(const Polynomial& other, std::size_t shift, int sign = 1);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

const Polynomial& zero_polynomial();

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Integer& c, Polynomial a);

// q^k * a; throws std::invalid_argument for negative k.
Polynomial monomial_mul(const Polynomial& a, std::int64_t k);

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// a = quotient * m + remainder with degree(remainder) < degree(m).
/// m must be monic; zero or non-monic divisors throw std::invalid_argument.
/// Zero coefficients of m are skipped, so the cost is degree(a) * nnz(m).
DivRem divrem_monic(const Polynomial& a, const Polynomial& m);

// Horner evaluation at an integer point.
Integer eval_at(const Polynomial& a, const Integer& x);

// a(q^k); throws std::invalid_argument for k <= 0.
Polynomial substitute_power(const Polynomial& a, std::int64_t k);

}  // namespace qfp
