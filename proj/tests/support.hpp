#pragma once

#include "qfp/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qfp::test {

// Every randomized test seeds from this value.
inline constexpr std::uint64_t kSeed = 20261014;

inline Polynomial poly(std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

inline Polynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  const int d = deg(rng);
  std::vector<Integer> v;
  for (int i = 0; i <= d; ++i) v.emplace_back(coef(rng));
  return Polynomial(std::move(v));
}

// Coefficients of roughly `bits` bits, either sign.
inline Polynomial random_wide_poly(std::mt19937_64& rng, std::size_t length, unsigned bits, bool allow_negative) {
  std::vector<Integer> v(length);
  for (auto& c : v) {
    for (unsigned b = 0; b < bits; b += 32) {
      c <<= 32;
      c += static_cast<unsigned long>(rng() & 0xffffffffu);
    }
    if (allow_negative && (rng() & 1)) c = -c;
  }
  return Polynomial(std::move(v));
}

inline Polynomial random_monic(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  const int d = deg(rng);
  std::vector<Integer> v;
  for (int i = 0; i < d; ++i) v.emplace_back(coef(rng));
  v.emplace_back(1);
  return Polynomial(std::move(v));
}

}  // namespace qfp::test
