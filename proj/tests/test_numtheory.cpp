#include "doctest.h"
#include "support.hpp"

#include "qfp/numtheory.hpp"

#include <set>
#include <stdexcept>

using namespace qfp;

namespace {

// Exhaustive squares; independent of Euler's criterion.
int legendre_by_squares(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

}  // namespace

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK(is_prime(9973));
  CHECK_FALSE(is_prime(9999));
  std::size_t count = 0;
  for (std::int64_t n = 1; n <= 1000; ++n) count += is_prime(n);
  CHECK(count == 168);
}

TEST_CASE("odd_primes_up_to") {
  CHECK(odd_primes_up_to(2).empty());
  CHECK(odd_primes_up_to(13) == std::vector<std::int64_t>{3, 5, 7, 11, 13});
  CHECK(odd_primes_up_to(10000).size() == 1228);
}

TEST_CASE("powmod") {
  CHECK(powmod(2, 10, 1000) == 24);
  CHECK(powmod(5, 0, 7) == 1);
  CHECK(powmod(5, 3, 1) == 0);
  CHECK(powmod(0xffffffffffffffc5ull - 1, 2, 0xffffffffffffffc5ull) == 1);
}

TEST_CASE("legendre values") {
  CHECK(legendre(5, 11) == 1);
  CHECK(legendre(5, 7) == -1);
  CHECK(legendre(5, 5) == 0);
  CHECK(legendre(-1, 7) == -1);
  CHECK(legendre(-1, 13) == 1);
  for (std::int64_t p : odd_primes_up_to(100)) {
    const int expected = ((p * p - 1) / 8) % 2 == 0 ? 1 : -1;
    CHECK(legendre(2, p) == expected);
  }
  CHECK_THROWS_AS(legendre(3, 9), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
}

TEST_CASE("legendre agrees with exhaustive squares") {
  for (std::int64_t p : odd_primes_up_to(150)) {
    for (std::int64_t a = -p; a <= 2 * p; ++a) CHECK(legendre(a, p) == legendre_by_squares(a, p));
  }
}

TEST_CASE("legendre is multiplicative") {
  std::mt19937_64 rng(qfp::test::kSeed + 20);
  const auto primes = odd_primes_up_to(200);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t p = primes[rng() % primes.size()];
    const auto a = static_cast<std::int64_t>(rng() % 100000) + 1;
    const auto b = static_cast<std::int64_t>(rng() % 100000) + 1;
    if (a % p == 0 || b % p == 0) continue;
    CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
  }
}

TEST_CASE("alpha_p") {
  CHECK(alpha_p(11) == 1);
  CHECK(alpha_p(7) == 3);
  CHECK(alpha_p(19) == 4);
  CHECK(alpha_p(3) == 2);
  CHECK_THROWS_AS(alpha_p(5), std::invalid_argument);
  CHECK_THROWS_AS(alpha_p(9), std::invalid_argument);
}

TEST_CASE("alpha_p consistency and the reciprocity pattern below 500") {
  for (std::int64_t p : odd_primes_up_to(500)) {
    if (p == 5) continue;
    const int a = alpha_p(p);
    CHECK(a >= 1);
    CHECK(a <= 4);
    CHECK((a * p) % 5 == 1);
    CHECK((legendre(5, p) == 1) == (p % 5 == 1 || p % 5 == 4));
    CHECK(((5 - a) * p + 1) % 5 == 0);
    CHECK((a * p - 1) % 5 == 0);
  }
}

TEST_CASE("PrimeContext") {
  const PrimeContext five(5);
  CHECK(five.legendre5() == 0);
  CHECK(five.legendre2() == -1);
  CHECK_FALSE(five.alpha().has_value());
  const PrimeContext seven(7);
  CHECK(seven.legendre5() == -1);
  CHECK(seven.legendre2() == 1);
  CHECK(seven.alpha() == 3);
  for (std::int64_t p : odd_primes_up_to(300)) {
    const PrimeContext ctx(p);
    CHECK((ctx.legendre5() == 0) == (p == 5));
    CHECK(ctx.alpha().has_value() == (p != 5));
    CHECK((ctx.legendre2() == 1 || ctx.legendre2() == -1));
  }
  CHECK_THROWS_AS(PrimeContext(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeContext(15), std::invalid_argument);
  CHECK_THROWS_AS(PrimeContext(1), std::invalid_argument);
}
