#include "doctest.h"
#include "support.hpp"

#include "qfp/congruence.hpp"
#include "qfp/numtheory.hpp"
#include "qfp/qcomb.hpp"
#include "qfp/sequences.hpp"
#include "qfp/serialization.hpp"

#include <stdexcept>

using namespace qfp;
using qfp::test::poly;

TEST_CASE("make_modulus") {
  CHECK(make_modulus(3, 1).poly() == poly({1, 1, 1}));
  CHECK(make_modulus(3, 2).poly() == poly({1, 0, 1, 0, 1}));
  for (std::int64_t p : odd_primes_up_to(60)) {
    const auto m2 = make_modulus(p, 2);
    CHECK(m2.degree() == 2 * p - 2);
    CHECK(m2.poly().leading() == 1);
    CHECK(m2.poly() == substitute_power(q_int(p), 2));
    CHECK(m2.period() == 2 * p);
  }
  CHECK_THROWS_AS(make_modulus(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_modulus(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_modulus(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_modulus(7, 0), std::invalid_argument);
  CHECK(make_modulus(7, 1) == make_modulus(7, 1));
  CHECK_FALSE(make_modulus(7, 1) == make_modulus(7, 2));
}

TEST_CASE("reduce") {
  const auto m3 = make_modulus(3, 1);
  CHECK(reduce(poly({0, 0, 0, 1}), m3).rep() == poly({1}));
  CHECK(reduce(poly({1, 1, 0, 0, 1}), m3).rep() == poly({1, 2}));
  CHECK(reduce(monomial_mul(q_pell(3), 1), m3).rep() == poly({-1}));
  CHECK(reduce(Polynomial{}, m3).rep() == Polynomial{});
  CHECK(reduce(q_fib(13), make_modulus(13, 1)).rep() == poly({0, 0, 0, 0, 0, 0, 0, 0, -1}));
  CHECK(reduce(monomial_mul(q_pell(11), 15), make_modulus(11, 1)).rep() == poly({-1}));
  CHECK(reduce(q_binomial(8, 3), make_modulus(3, 2)).rep() == poly({1, 0, 0, 1}));
  CHECK(reduce(q_binomial(12, 5), make_modulus(5, 2)).rep() == poly({1, 0, 0, 0, 0, 1}));
}

TEST_CASE("Residue rejects unreduced representatives") {
  const auto m = make_modulus(5, 1);
  CHECK_NOTHROW(Residue(m, poly({1, 2, 3, 4})));
  CHECK_THROWS_AS(Residue(m, poly({1, 2, 3, 4, 5})), std::invalid_argument);
  CHECK(to_json(Residue(m, poly({0, -1}))).dump() == R"({"coeffs":["0","-1"],"p":5,"base_power":1})");
  const auto back = residue_from_json(to_json(Residue(make_modulus(7, 2), poly({3, 0, 1}))));
  CHECK(back.modulus() == make_modulus(7, 2));
  CHECK(back.rep() == poly({3, 0, 1}));
}

TEST_CASE("residues_equal") {
  std::mt19937_64 rng(qfp::test::kSeed + 30);
  const auto m = make_modulus(7, 1);
  const auto a = qfp::test::random_poly(rng, 30, 100);
  CHECK(residues_equal(a, a + m.poly(), m));
  for (std::int64_t p : odd_primes_up_to(50)) {
    CHECK(residues_equal(Polynomial::monomial(Integer(1), static_cast<std::size_t>(p)), poly({1}),
                         make_modulus(p, 1)));
  }
  CHECK(residues_equal(q_fib(8), Polynomial{}, m));
  CHECK_FALSE(residues_equal(poly({1}), poly({2}), m));
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(qfp::test::kSeed + 31);
  const auto primes = odd_primes_up_to(40);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = make_modulus(primes[rng() % primes.size()], static_cast<int>(rng() % 2 + 1));
    const auto a = qfp::test::random_poly(rng, 60, 1000);
    const auto b = qfp::test::random_poly(rng, 60, 1000);
    const auto ra = reduce(a, m).rep();
    const auto rb = reduce(b, m).rep();
    CHECK(reduce(a * b, m).rep() == reduce(ra * rb, m).rep());
    CHECK(reduce(a + b, m).rep() == reduce(ra + rb, m).rep());
  }
}

TEST_CASE("q^(base_power * p) reduces to 1 for p < 200") {
  for (std::int64_t p : odd_primes_up_to(200)) {
    for (int bp : {1, 2}) {
      const auto m = make_modulus(p, bp);
      CHECK(reduce(Polynomial::monomial(Integer(1), static_cast<std::size_t>(bp * p)), m).rep() == poly({1}));
    }
  }
}

TEST_CASE("fold path, serial fold path and division path agree for p < 100") {
  std::mt19937_64 rng(qfp::test::kSeed + 32);
  const auto primes = odd_primes_up_to(100);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = make_modulus(primes[rng() % primes.size()], static_cast<int>(rng() % 2 + 1));
    const auto a = qfp::test::random_poly(rng, 500, 1'000'000);
    const auto by_division = reduce_by_division(a, m);
    CHECK(reduce(a, m).rep() == by_division);
    CHECK(reduce_serial(a, m) == by_division);
    CHECK(by_division.degree() < m.degree());
  }
}

TEST_CASE("congruence mod [p]_{q^2} transfers to base q on q-Pell instances") {
  // If a(q^2) = c q^(2k) mod [p]_{q^2} then a(q) = c q^k mod [p]_q.
  for (std::int64_t p : odd_primes_up_to(60)) {
    const PrimeContext ctx(p);
    const Integer c(ctx.legendre2());
    const auto k = static_cast<std::size_t>((p * p - 1) / 8);
    const auto m1 = make_modulus(p, 1);
    const auto m2 = make_modulus(p, 2);
    const Polynomial a = q_pell_hat(p);
    const bool doubled = residues_equal(substitute_power(a, 2), Polynomial::monomial(c, 2 * k), m2);
    CHECK(doubled);
    if (doubled) CHECK(residues_equal(a, Polynomial::monomial(c, k), m1));
    const Polynomial b = monomial_mul(q_pell(p), static_cast<std::int64_t>(k));
    const bool doubled_b = residues_equal(substitute_power(b, 2), Polynomial::constant(c), m2);
    CHECK(doubled_b);
    if (doubled_b) CHECK(residues_equal(b, Polynomial::constant(c), m1));
  }
}
