#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qfp {

// Trial division; is_prime(1) is false.
bool is_prime(std::int64_t n);

// Odd primes 3 <= p <= bound, ascending.
std::vector<std::int64_t> odd_primes_up_to(std::int64_t bound);

// a^e mod m for m >= 1.
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Legendre symbol (a/p) by Euler's criterion. Throws std::invalid_argument
/// unless p is an odd prime.
int legendre(std::int64_t a, std::int64_t p);

/// The alpha in 1..4 with alpha * p = 1 (mod 5). Throws for p = 5 or
/// non-prime p.
int alpha_p(std::int64_t p);

/// An odd prime together with (5/p), (2/p) and alpha_p (absent for p = 5).
class PrimeContext {
 public:
  // Throws std::invalid_argument unless p is an odd prime.
  explicit PrimeContext(std::int64_t p);

  std::int64_t p() const noexcept { return p_; }
  int legendre5() const noexcept { return legendre5_; }
  int legendre2() const noexcept { return legendre2_; }
  std::optional<int> alpha() const noexcept { return alpha_; }

 private:
  std::int64_t p_;
  int legendre5_;
  int legendre2_;
  std::optional<int> alpha_;
};

}  // namespace qfp
