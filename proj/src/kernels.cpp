#include "qfp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

static_assert(GMP_LIMB_BITS == 64, "packing assumes 64-bit limbs");

namespace qfp::kernels {

namespace {

constexpr std::size_t kLimbBits = 64;

std::size_t max_bits(std::span<const Integer> a) {
  std::size_t bits = 1;
  for (const auto& c : a) {
    bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return bits;
}

bool any_negative(std::span<const Integer> a) {
  return std::any_of(a.begin(), a.end(), [](const Integer& c) { return sgn(c) < 0; });
}

// Writes sum of |a[i]| * 2^(i*stride) over coefficients whose sign matches
// `sign` into out. Fields never overlap because every |a[i]| < 2^stride.
void pack_magnitudes(mpz_ptr out, std::span<const Integer> a, std::size_t stride, int sign) {
  const std::size_t total_bits = a.size() * stride;
  const std::size_t limbs = total_bits / kLimbBits + 2;
  mp_limb_t* w = mpz_limbs_write(out, static_cast<mp_size_t>(limbs));
  std::memset(w, 0, limbs * sizeof(mp_limb_t));
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_srcptr c = a[i].get_mpz_t();
    if (mpz_sgn(c) != sign) continue;
    const std::size_t n = mpz_size(c);
    const mp_limb_t* src = mpz_limbs_read(c);
    const std::size_t bit = i * stride;
    const std::size_t wi = bit / kLimbBits;
    const unsigned r = static_cast<unsigned>(bit % kLimbBits);
    for (std::size_t t = 0; t < n; ++t) {
      w[wi + t] |= src[t] << r;
      if (r != 0) w[wi + t + 1] |= src[t] >> (kLimbBits - r);
    }
  }
  mpz_limbs_finish(out, static_cast<mp_size_t>(limbs));
}

Integer pack(std::span<const Integer> a, std::size_t stride) {
  Integer value;
  pack_magnitudes(value.get_mpz_t(), a, stride, 1);
  if (any_negative(a)) {
    Integer neg;
    pack_magnitudes(neg.get_mpz_t(), a, stride, -1);
    value -= neg;
  }
  return value;
}

// Sets bit (k*stride + stride - 1) for every k < count.
Integer digit_offset(std::size_t count, std::size_t stride) {
  Integer value;
  const std::size_t limbs = (count * stride) / kLimbBits + 2;
  mp_limb_t* w = mpz_limbs_write(value.get_mpz_t(), static_cast<mp_size_t>(limbs));
  std::memset(w, 0, limbs * sizeof(mp_limb_t));
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t bit = k * stride + stride - 1;
    w[bit / kLimbBits] |= mp_limb_t{1} << (bit % kLimbBits);
  }
  mpz_limbs_finish(value.get_mpz_t(), static_cast<mp_size_t>(limbs));
  return value;
}

void extract_field(mpz_ptr out, const mp_limb_t* src, std::size_t src_size, std::size_t bit,
                   std::size_t width) {
  const std::size_t field_limbs = (width + kLimbBits - 1) / kLimbBits;
  const std::size_t wi = bit / kLimbBits;
  const unsigned r = static_cast<unsigned>(bit % kLimbBits);
  auto limb = [&](std::size_t idx) -> mp_limb_t { return idx < src_size ? src[idx] : 0; };
  mp_limb_t* w = mpz_limbs_write(out, static_cast<mp_size_t>(field_limbs));
  for (std::size_t t = 0; t < field_limbs; ++t) {
    mp_limb_t v = limb(wi + t) >> r;
    if (r != 0) v |= limb(wi + t + 1) << (kLimbBits - r);
    w[t] = v;
  }
  if (const std::size_t top = width % kLimbBits; top != 0) {
    w[field_limbs - 1] &= (mp_limb_t{1} << top) - 1;
  }
  mpz_limbs_finish(out, static_cast<mp_size_t>(field_limbs));
}

// Reads out_size base-2^stride digits of value. With signed_digits every digit
// lies in (-2^(stride-1), 2^(stride-1)); adding 2^(stride-1) to each makes
// them plain unsigned digits of a nonnegative number.
std::vector<Integer> unpack(Integer& value, std::size_t out_size, std::size_t stride, bool signed_digits) {
  Integer half;
  if (signed_digits) {
    value += digit_offset(out_size, stride);
    mpz_setbit(half.get_mpz_t(), stride - 1);
  }
  std::vector<Integer> out(out_size);
  const mp_limb_t* src = mpz_limbs_read(value.get_mpz_t());
  const std::size_t src_size = mpz_size(value.get_mpz_t());
  const auto n = static_cast<std::int64_t>(out_size);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    mpz_ptr c = out[static_cast<std::size_t>(k)].get_mpz_t();
    extract_field(c, src, src_size, static_cast<std::size_t>(k) * stride, stride);
    if (signed_digits) mpz_sub(c, c, half.get_mpz_t());
  }
  return out;
}

}  // namespace

std::vector<Integer> convolve_schoolbook(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<Integer> convolve_schoolbook_parallel(std::span<const Integer> a,
                                                  std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  const auto out_size = static_cast<std::int64_t>(a.size() + b.size() - 1);
  const auto na = static_cast<std::int64_t>(a.size());
  const auto nb = static_cast<std::int64_t>(b.size());
  std::vector<Integer> out(static_cast<std::size_t>(out_size));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < out_size; ++k) {
    const std::int64_t lo = std::max<std::int64_t>(0, k - nb + 1);
    const std::int64_t hi = std::min<std::int64_t>(k, na - 1);
    mpz_ptr acc = out[static_cast<std::size_t>(k)].get_mpz_t();
    for (std::int64_t i = lo; i <= hi; ++i) {
      mpz_addmul(acc, a[static_cast<std::size_t>(i)].get_mpz_t(),
                 b[static_cast<std::size_t>(k - i)].get_mpz_t());
    }
  }
  return out;
}

std::vector<Integer> convolve_kronecker(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t shorter = std::min(a.size(), b.size());
  // |out[k]| < shorter * 2^(bits_a + bits_b) <= 2^(stride - 1)
  const std::size_t stride =
      max_bits(a) + max_bits(b) + static_cast<std::size_t>(std::bit_width(shorter)) + 1;
  const bool signed_digits = any_negative(a) || any_negative(b);
  Integer product = pack(a, stride) * pack(b, stride);
  return unpack(product, a.size() + b.size() - 1, stride, signed_digits);
}

std::vector<Integer> sum_of_products(std::span<const ProductTerm> terms) {
  std::size_t stride = 0;
  std::size_t out_size = 0;
  for (const auto& t : terms) {
    if (t.a.empty() || t.b.empty()) continue;
    const std::size_t shorter = std::min(t.a.size(), t.b.size());
    stride = std::max(stride, max_bits(t.a) + max_bits(t.b) + static_cast<std::size_t>(std::bit_width(shorter)));
    out_size = std::max(out_size, t.a.size() + t.b.size() - 1 + t.shift);
  }
  if (out_size == 0) return {};
  // Room for the sum of every term, plus the sign bit.
  stride += static_cast<std::size_t>(std::bit_width(terms.size())) + 1;

  // Positive and negative parts accumulate separately as raw limbs, each
  // product added in place at its bit offset.
  const std::size_t total_limbs = (out_size * stride) / kLimbBits + 2;
  std::vector<mp_limb_t> pos(total_limbs, 0), neg(total_limbs, 0), shifted;
  Integer product;
  for (const auto& t : terms) {
    if (t.a.empty() || t.b.empty()) continue;
    product = pack(t.a, stride) * pack(t.b, stride);
    const int sign = sgn(product) * (t.sign >= 0 ? 1 : -1);
    if (sign == 0) continue;
    const std::size_t bit = t.shift * stride;
    const std::size_t offset = bit / kLimbBits;
    const auto r = static_cast<unsigned>(bit % kLimbBits);
    const std::size_t n = mpz_size(product.get_mpz_t());
    shifted.assign(n + 1, 0);
    const mp_limb_t* src = mpz_limbs_read(product.get_mpz_t());
    if (r == 0) {
      std::copy(src, src + n, shifted.begin());
    } else {
      shifted[n] = mpn_lshift(shifted.data(), src, static_cast<mp_size_t>(n), r);
    }
    auto& dst = sign > 0 ? pos : neg;
    if (offset + n + 1 > dst.size()) throw std::logic_error("sum_of_products: stride too small");
    mp_limb_t carry = mpn_add_n(dst.data() + offset, dst.data() + offset, shifted.data(),
                                static_cast<mp_size_t>(n + 1));
    for (std::size_t i = offset + n + 1; carry != 0 && i < dst.size(); ++i) carry = (++dst[i] == 0);
  }
  Integer acc, negative;
  auto load = [total_limbs](Integer& z, const std::vector<mp_limb_t>& limbs) {
    mp_limb_t* w = mpz_limbs_write(z.get_mpz_t(), static_cast<mp_size_t>(total_limbs));
    std::copy(limbs.begin(), limbs.end(), w);
    mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(total_limbs));
  };
  load(acc, pos);
  load(negative, neg);
  acc -= negative;
  auto out = unpack(acc, out_size, stride, true);
  while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
  return out;
}

std::vector<Integer> sum_of_products_serial(std::span<const ProductTerm> terms) {
  std::vector<Integer> out;
  for (const auto& t : terms) {
    const auto part = convolve_schoolbook(t.a, t.b);
    if (out.size() < part.size() + t.shift) out.resize(part.size() + t.shift);
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (t.sign >= 0) {
        out[i + t.shift] += part[i];
      } else {
        out[i + t.shift] -= part[i];
      }
    }
  }
  while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
  return out;
}

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b) {
  if (std::min(a.size(), b.size()) < kKroneckerThreshold) return convolve_schoolbook(a, b);
  return convolve_kronecker(a, b);
}

std::vector<Integer> fold_exponents_serial(std::span<const Integer> a, std::size_t period) {
  std::vector<Integer> out(std::min(period, a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i % period] += a[i];
  return out;
}

std::vector<Integer> fold_exponents(std::span<const Integer> a, std::size_t period) {
  const auto width = static_cast<std::int64_t>(std::min(period, a.size()));
  std::vector<Integer> out(static_cast<std::size_t>(width));
  if (width == 0) return out;
#pragma omp parallel for schedule(static) if (a.size() > 4096)
  for (std::int64_t r = 0; r < width; ++r) {
    mpz_ptr acc = out[static_cast<std::size_t>(r)].get_mpz_t();
    for (std::size_t i = static_cast<std::size_t>(r); i < a.size(); i += period) {
      mpz_add(acc, acc, a[i].get_mpz_t());
    }
  }
  return out;
}

}  // namespace qfp::kernels
