#include "qfp/qcomb.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qfp {

namespace {

void require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
}

// q^a - 1
Polynomial shifted_unit(std::int64_t a) {
  Polynomial p = Polynomial::monomial(1, static_cast<std::size_t>(a));
  p -= Polynomial{1};
  return p;
}

// a * (q^k - 1) as a shift and a subtraction; the general product would pad
// the two-term factor to full width.
Polynomial times_shifted_unit(const Polynomial& a, std::int64_t k) {
  Polynomial out = -a;
  out.add_shifted(a, static_cast<std::size_t>(k));
  return out;
}

}  // namespace

Polynomial q_int(std::int64_t n) {
  require_nonnegative(n, "q_int");
  return Polynomial(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

Polynomial q_binomial(std::int64_t n, std::int64_t m) {
  require_nonnegative(n, "q_binomial");
  if (m < 0 || m > n) return {};
  // band[c] holds [r, c] for the columns still needed at row r.
  std::vector<Polynomial> band(static_cast<std::size_t>(m) + 1);
  band[0] = Polynomial{1};
  for (std::int64_t r = 1; r <= n; ++r) {
    const std::int64_t lo = std::max<std::int64_t>(1, m - (n - r));
    const std::int64_t hi = std::min(r, m);
    for (std::int64_t c = hi; c >= lo; --c) {
      auto& cell = band[static_cast<std::size_t>(c)];
      Polynomial next = monomial_mul(cell, c);
      next += band[static_cast<std::size_t>(c - 1)];
      cell = std::move(next);
    }
  }
  return band[static_cast<std::size_t>(m)];
}

Polynomial q_binomial_product(std::int64_t n, std::int64_t m) {
  require_nonnegative(n, "q_binomial_product");
  if (m < 0 || m > n) return {};
  Polynomial acc{1};
  for (std::int64_t k = 1; k <= m; ++k) {
    auto [quotient, remainder] = divrem_monic(times_shifted_unit(acc, n - k + 1), shifted_unit(k));
    if (!remainder.is_zero()) {
      throw std::logic_error("q_binomial_product: inexact division at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
    }
    acc = std::move(quotient);
  }
  return acc;
}

namespace {

// q^m * a + b, written once into a vector of the final size.
Polynomial pascal_cell(const Polynomial& a, std::int64_t m, const Polynomial& b) {
  const auto shift = static_cast<std::size_t>(m);
  const std::size_t na = a.is_zero() ? 0 : a.size() + shift;
  std::vector<Integer> out(std::max(na, b.size()));
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool has_a = i >= shift && i - shift < ac.size();
    const bool has_b = i < bc.size();
    mpz_ptr dst = out[i].get_mpz_t();
    if (has_a && has_b) {
      mpz_add(dst, ac[i - shift].get_mpz_t(), bc[i].get_mpz_t());
    } else if (has_a) {
      mpz_set(dst, ac[i - shift].get_mpz_t());
    } else if (has_b) {
      mpz_set(dst, bc[i].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

}  // namespace

BinomialRow::BinomialRow() : n_(0), half_{Polynomial{1}} {}

const Polynomial& BinomialRow::at(std::int64_t m) const {
  if (m < 0 || m > n_) return zero_polynomial();
  if (2 * m > n_) m = n_ - m;
  return half_[static_cast<std::size_t>(m)];
}

BinomialRow BinomialRow::next() const {
  const std::int64_t count = (n_ + 1) / 2 + 1;
  std::vector<Polynomial> half(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t m = 0; m < count; ++m) {
    half[static_cast<std::size_t>(m)] = pascal_cell(at(m), m, at(m - 1));
  }
  return BinomialRow(n_ + 1, std::move(half));
}

BinomialRow BinomialRow::next_serial() const {
  const std::int64_t count = (n_ + 1) / 2 + 1;
  std::vector<Polynomial> half;
  half.reserve(static_cast<std::size_t>(count));
  for (std::int64_t m = 0; m < count; ++m) {
    Polynomial cell = monomial_mul(at(m), m);
    cell += at(m - 1);
    half.push_back(std::move(cell));
  }
  return BinomialRow(n_ + 1, std::move(half));
}

BinomialRow BinomialRow::by_product(std::int64_t n) {
  require_nonnegative(n, "BinomialRow::by_product");
  std::vector<Polynomial> half;
  half.reserve(static_cast<std::size_t>(n / 2 + 1));
  half.push_back(Polynomial{1});
  for (std::int64_t k = 1; k <= n / 2; ++k) {
    auto [quotient, remainder] = divrem_monic(times_shifted_unit(half.back(), n - k + 1), shifted_unit(k));
    if (!remainder.is_zero()) throw std::logic_error("BinomialRow::by_product: inexact division");
    half.push_back(std::move(quotient));
  }
  return BinomialRow(n, std::move(half));
}

BinomialTable::BinomialTable(std::int64_t max_n) {
  require_nonnegative(max_n, "BinomialTable");
  rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  rows_.emplace_back();
  for (std::int64_t n = 1; n <= max_n; ++n) rows_.push_back(rows_.back().next());
}

const BinomialRow& BinomialTable::row(std::int64_t n) const {
  if (n < 0 || n > max_n()) {
    throw std::out_of_range("BinomialTable: row " + std::to_string(n) + " not tabulated");
  }
  return rows_[static_cast<std::size_t>(n)];
}

}  // namespace qfp
