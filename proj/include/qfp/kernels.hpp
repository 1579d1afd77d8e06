#pragma once

// Coefficient-level kernels. Each OpenMP-parallel kernel has a serial
// counterpart with identical output; the serial versions back the unit tests
// and the benchmark comparisons.

#include "qfp/integer.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qfp::kernels {

// Inputs shorter than this on either side go through the schoolbook kernel.
inline constexpr std::size_t kKroneckerThreshold = 16;

/// Reference convolution, out[i + j] += a[i] * b[j].
std::vector<Integer> convolve_schoolbook(std::span<const Integer> a, std::span<const Integer> b);

/// Same schoolbook product with the output index range split across threads.
std::vector<Integer> convolve_schoolbook_parallel(std::span<const Integer> a,
                                                  std::span<const Integer> b);

/// Kronecker substitution: both inputs are packed into one big integer at a
/// bit stride wide enough that no output coefficient can overflow, multiplied
/// with a single GMP product, and unpacked (in parallel) in balanced form.
std::vector<Integer> convolve_kronecker(std::span<const Integer> a, std::span<const Integer> b);

// One signed, shifted product in a sum: sign * q^shift * a * b.
struct ProductTerm {
  std::span<const Integer> a;
  std::span<const Integer> b;
  std::size_t shift = 0;
  int sign = 1;
};

/// Sum of several products, accumulated as one packed integer at a common
/// stride and unpacked once. Trailing zeros are trimmed.
std::vector<Integer> sum_of_products(std::span<const ProductTerm> terms);
std::vector<Integer> sum_of_products_serial(std::span<const ProductTerm> terms);

// Picks schoolbook or Kronecker by operand size.
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b);

/// out[r] = sum of a[r + t * period] over t; out has length min(period, a.size()).
std::vector<Integer> fold_exponents_serial(std::span<const Integer> a, std::size_t period);
std::vector<Integer> fold_exponents(std::span<const Integer> a, std::size_t period);

}  // namespace qfp::kernels
