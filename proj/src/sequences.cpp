#include "qfp/sequences.hpp"

#include "qfp/qcomb.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qfp {

namespace {

constexpr std::array<std::pair<SequenceVariant, std::string_view>, 4> kNames{{
    {SequenceVariant::fib_schur, "fib"},
    {SequenceVariant::fib_hat, "fib-hat"},
    {SequenceVariant::pell, "pell"},
    {SequenceVariant::pell_hat, "pell-hat"},
}};

void require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

}  // namespace

std::string_view cli_name(SequenceVariant v) {
  for (const auto& [variant, name] : kNames) {
    if (variant == v) return name;
  }
  return "?";
}

std::optional<SequenceVariant> parse_sequence_variant(std::string_view name) {
  for (const auto& [variant, known] : kNames) {
    if (known == name) return variant;
  }
  return std::nullopt;
}

SequenceIterator::SequenceIterator(SequenceVariant variant) : variant_(variant) {}

void SequenceIterator::advance() {
  const std::int64_t n = index_ + 1;
  if (n == 1) {
    previous_ = std::move(current_);
    current_ = Polynomial{1};
    index_ = n;
    return;
  }
  const auto lag = static_cast<std::size_t>(n - 1);
  Polynomial next = current_;
  switch (variant_) {
    case SequenceVariant::fib_schur:
      next.add_shifted(previous_, lag - 1);
      break;
    case SequenceVariant::fib_hat:
      next.add_shifted(previous_, lag);
      break;
    case SequenceVariant::pell:
      next.add_shifted(current_, lag);
      next.add_shifted(previous_, lag - 1);
      break;
    case SequenceVariant::pell_hat:
      next.add_shifted(current_, lag);
      next.add_shifted(previous_, lag);
      break;
  }
  previous_ = std::move(current_);
  current_ = std::move(next);
  index_ = n;
}

void SequenceIterator::advance_to(std::int64_t n) {
  if (n < index_) throw std::invalid_argument("SequenceIterator: cannot move backwards");
  while (index_ < n) advance();
}

Polynomial sequence_term(SequenceVariant variant, std::int64_t n) {
  require_nonnegative(n, "sequence_term");
  SequenceIterator it(variant);
  it.advance_to(n);
  return it.current();
}

Polynomial t1(std::int64_t n, std::int64_t m) {
  require_nonnegative(n, "t1");
  Polynomial sum;
  for (std::int64_t j = 0; j <= n; ++j) {
    const std::int64_t lower = n - m - j;
    const std::int64_t upper = 2 * n - 2 * j;
    if (lower < 0 || lower > upper) continue;
    Polynomial term = substitute_power(q_binomial(n, j), 2) * q_binomial(upper, lower);
    sum.add_shifted(term, static_cast<std::size_t>(j), j % 2 == 0 ? 1 : -1);
  }
  return sum;
}

Integer classical_fib(std::int64_t n) {
  require_nonnegative(n, "classical_fib");
  Integer prev = 0, cur = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (i == 1) {
      cur = 1;
      continue;
    }
    Integer next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer classical_pell(std::int64_t n) {
  require_nonnegative(n, "classical_pell");
  Integer prev = 0, cur = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (i == 1) {
      cur = 1;
      continue;
    }
    Integer next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace qfp
