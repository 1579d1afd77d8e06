#pragma once

#include "qfp/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace qfp {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0. Throws for negative n.
Polynomial q_int(std::int64_t n);

/// Gaussian binomial by the Pascal-type recurrence
///   [r+1, c] = q^c [r, c] + [r, c-1],
/// restricted to the band of cells that feed [n, m]. Zero for m < 0 or m > n.
/// Throws std::invalid_argument for negative n.
Polynomial q_binomial(std::int64_t n, std::int64_t m);

/// Gaussian binomial from the product formula: numerator factors (q^(n-k+1) - 1)
/// and denominator factors (q^k - 1), interleaved so that every partial
/// quotient is itself a Gaussian binomial, dividing with divrem_monic.
/// Throws std::logic_error if a division leaves a remainder.
Polynomial q_binomial_product(std::int64_t n, std::int64_t m);

/// One row [n, 0..n] of Gaussian binomials. Only 0 <= m <= n/2 is stored; the
/// rest is served by the symmetry [n, m] = [n, n-m].
class BinomialRow {
 public:
  BinomialRow();  // row 0

  // Row n+1 by the Pascal recurrence, parallel over m.
  BinomialRow next() const;
  // Serial reference for next().
  BinomialRow next_serial() const;

  // Row n from the product formula (see q_binomial_product), sequentially in m.
  static BinomialRow by_product(std::int64_t n);

  std::int64_t n() const noexcept { return n_; }
  // Zero polynomial when m < 0 or m > n.
  const Polynomial& at(std::int64_t m) const;

 private:
  BinomialRow(std::int64_t n, std::vector<Polynomial> half) : n_(n), half_(std::move(half)) {}

  std::int64_t n_ = 0;
  std::vector<Polynomial> half_;
};

/// Rows 0..max_n kept in memory. Read-only once constructed.
class BinomialTable {
 public:
  explicit BinomialTable(std::int64_t max_n);

  std::int64_t max_n() const noexcept { return static_cast<std::int64_t>(rows_.size()) - 1; }
  const BinomialRow& row(std::int64_t n) const;
  const Polynomial& at(std::int64_t n, std::int64_t m) const { return row(n).at(m); }

 private:
  std::vector<BinomialRow> rows_;
};

}  // namespace qfp
