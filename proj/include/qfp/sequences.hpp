#pragma once

#include "qfp/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace qfp {

// The four q-deformed sequences. Each starts 0, 1 and differs in the
// recurrence weights:
//   fib_schur: a_n = a_{n-1} + q^(n-2) a_{n-2}
//   fib_hat:   a_n = a_{n-1} + q^(n-1) a_{n-2}
//   pell:      a_n = (1 + q^(n-1)) a_{n-1} + q^(n-2) a_{n-2}
//   pell_hat:  a_n = (1 + q^(n-1)) a_{n-1} + q^(n-1) a_{n-2}
enum class SequenceVariant { fib_schur, fib_hat, pell, pell_hat };

// "fib", "fib-hat", "pell", "pell-hat"
std::string_view cli_name(SequenceVariant v);
std::optional<SequenceVariant> parse_sequence_variant(std::string_view name);

/// Walks a sequence forward one index at a time, keeping the last two terms.
class SequenceIterator {
 public:
  explicit SequenceIterator(SequenceVariant variant);

  std::int64_t index() const noexcept { return index_; }
  const Polynomial& current() const noexcept { return current_; }
  // Term at index() - 1; zero at index 0.
  const Polynomial& previous() const noexcept { return previous_; }

  void advance();
  void advance_to(std::int64_t n);

 private:
  SequenceVariant variant_;
  std::int64_t index_ = 0;
  Polynomial previous_;
  Polynomial current_;
};

// Throws std::invalid_argument for negative n.
Polynomial sequence_term(SequenceVariant variant, std::int64_t n);

inline Polynomial q_fib(std::int64_t n) { return sequence_term(SequenceVariant::fib_schur, n); }
inline Polynomial q_fib_hat(std::int64_t n) { return sequence_term(SequenceVariant::fib_hat, n); }
inline Polynomial q_pell(std::int64_t n) { return sequence_term(SequenceVariant::pell, n); }
inline Polynomial q_pell_hat(std::int64_t n) { return sequence_term(SequenceVariant::pell_hat, n); }

/// Sum over j in [0, n] of (-q)^j [n, j]_{q^2} [2n-2j, n-m-j]_q.
/// Zero whenever |m| > n. Throws for negative n.
Polynomial t1(std::int64_t n, std::int64_t m);

Integer classical_fib(std::int64_t n);   // F_n = F_{n-1} + F_{n-2}
Integer classical_pell(std::int64_t n);  // P_n = 2 P_{n-1} + P_{n-2}

}  // namespace qfp
