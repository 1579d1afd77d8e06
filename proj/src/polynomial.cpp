#include "qfp/polynomial.hpp"

#include "qfp/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qfp {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::constant(const Integer& c) { return monomial(c, 0); }

Polynomial Polynomial::monomial(const Integer& c, std::size_t exponent) {
  Polynomial p;
  if (sgn(c) != 0) {
    p.coeffs_.resize(exponent + 1);
    p.coeffs_[exponent] = c;
  }
  return p;
}

Integer Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool Polynomial::all_coefficients_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return add_shifted(other, 0, 1); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return add_shifted(other, 0, -1); }

Polynomial& Polynomial::add_shifted(const Polynomial& other, std::size_t shift, int sign) {
  if (other.is_zero()) return *this;
  const std::size_t needed = other.coeffs_.size() + shift;
  if (coeffs_.size() < needed) coeffs_.resize(needed);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    mpz_ptr dst = coeffs_[i + shift].get_mpz_t();
    if (sign >= 0) {
      mpz_add(dst, dst, other.coeffs_[i].get_mpz_t());
    } else {
      mpz_sub(dst, dst, other.coeffs_[i].get_mpz_t());
    }
  }
  normalize();
  return *this;
}

const Polynomial& zero_polynomial() {
  static const Polynomial zero;
  return zero;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator-(Polynomial a) {
  std::vector<Integer> coeffs(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : coeffs) c = -c;
  return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return Polynomial(kernels::convolve(a.coeffs(), b.coeffs()));
}

Polynomial operator*(const Integer& c, Polynomial a) {
  std::vector<Integer> coeffs(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : coeffs) x *= c;
  return Polynomial(std::move(coeffs));
}

Polynomial monomial_mul(const Polynomial& a, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("monomial_mul: negative exponent shift");
  Polynomial out;
  return out.add_shifted(a, static_cast<std::size_t>(k));
}

DivRem divrem_monic(const Polynomial& a, const Polynomial& m) {
  if (m.is_zero()) throw std::invalid_argument("divrem_monic: zero divisor");
  if (m.leading() != 1) throw std::invalid_argument("divrem_monic: divisor is not monic");
  const auto dm = static_cast<std::size_t>(m.degree());
  if (a.is_zero() || a.degree() < m.degree()) return {Polynomial{}, a};

  std::vector<std::pair<std::size_t, const Integer*>> tail;  // nonzero m_j, j < dm
  for (std::size_t j = 0; j < dm; ++j) {
    if (sgn(m.coeffs()[j]) != 0) tail.emplace_back(j, &m.coeffs()[j]);
  }

  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> quot(rem.size() - dm);
  for (std::size_t i = rem.size(); i-- > dm;) {
    if (sgn(rem[i]) == 0) continue;
    const std::size_t base = i - dm;
    mpz_swap(quot[base].get_mpz_t(), rem[i].get_mpz_t());
    const mpz_srcptr c = quot[base].get_mpz_t();
    // Cyclotomic-style divisors have unit coefficients.
    for (const auto& [j, mj] : tail) {
      mpz_ptr r = rem[base + j].get_mpz_t();
      if (*mj == 1) {
        mpz_sub(r, r, c);
      } else if (*mj == -1) {
        mpz_add(r, r, c);
      } else {
        mpz_submul(r, c, mj->get_mpz_t());
      }
    }
  }
  rem.resize(dm);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Integer eval_at(const Polynomial& a, const Integer& x) {
  Integer acc = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial substitute_power(const Polynomial& a, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("substitute_power: exponent must be positive");
  if (a.is_zero()) return a;
  const auto step = static_cast<std::size_t>(k);
  std::vector<Integer> coeffs((a.size() - 1) * step + 1);
  for (std::size_t i = 0; i < a.size(); ++i) coeffs[i * step] = a.coeffs()[i];
  return Polynomial(std::move(coeffs));
}

}  // namespace qfp
