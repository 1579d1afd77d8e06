#include "qfp/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace qfp {

namespace {

void require_odd_prime(std::int64_t p, const char* what) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) +
                                " is not an odd prime");
  }
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> odd_primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 3; n <= bound; n += 2) {
    if (is_prime(n)) primes.push_back(n);
  }
  return primes;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  __extension__ typedef unsigned __int128 wide;
  std::uint64_t result = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) result = static_cast<std::uint64_t>(wide{result} * a % m);
    a = static_cast<std::uint64_t>(wide{a} * a % m);
    e >>= 1;
  }
  return result;
}

int legendre(std::int64_t a, std::int64_t p) {
  require_odd_prime(p, "legendre");
  std::int64_t r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t e = powmod(static_cast<std::uint64_t>(r), (up - 1) / 2, up);
  return e == 1 ? 1 : -1;
}

int alpha_p(std::int64_t p) {
  require_odd_prime(p, "alpha_p");
  if (p == 5) throw std::invalid_argument("alpha_p: undefined for p = 5");
  for (int alpha = 1; alpha <= 4; ++alpha) {
    if ((alpha * p) % 5 == 1) return alpha;
  }
  throw std::logic_error("alpha_p: no solution");
}

PrimeContext::PrimeContext(std::int64_t p)
    : p_(p), legendre5_(legendre(5, p)), legendre2_(legendre(2, p)) {
  if (p != 5) alpha_ = alpha_p(p);
}

}  // namespace qfp
