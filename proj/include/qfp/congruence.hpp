#pragma once

#include "qfp/polynomial.hpp"

#include <cstdint>

namespace qfp {

/// [p]_q (base_power 1) or [p]_{q^2} (base_power 2) for an odd prime p.
class Modulus {
 public:
  // Throws std::invalid_argument for non-prime p or base_power outside {1, 2}.
  Modulus(std::int64_t p, int base_power);

  std::int64_t p() const noexcept { return p_; }
  int base_power() const noexcept { return base_power_; }
  // Monic, degree base_power * (p - 1).
  const Polynomial& poly() const noexcept { return poly_; }
  std::int64_t degree() const noexcept { return poly_.degree(); }
  // q^period() = 1 modulo poly().
  std::int64_t period() const noexcept { return base_power_ * p_; }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.p_ == b.p_ && a.base_power_ == b.base_power_;
  }

 private:
  std::int64_t p_;
  int base_power_;
  Polynomial poly_;
};

inline Modulus make_modulus(std::int64_t p, int base_power) { return Modulus(p, base_power); }

/// Canonical remainder of a polynomial modulo a Modulus.
class Residue {
 public:
  Residue(Modulus modulus, Polynomial rep);

  const Modulus& modulus() const noexcept { return modulus_; }
  const Polynomial& rep() const noexcept { return rep_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Modulus modulus_;
  Polynomial rep_;
};

/// Folds every exponent e to e mod period(), then finishes with one monic
/// division. Returns the same remainder as reduce_by_division.
Residue reduce(const Polynomial& a, const Modulus& m);

// Remainder of a single long division by m.poly(); the reference path.
Polynomial reduce_by_division(const Polynomial& a, const Modulus& m);

// Same as reduce(), using the serial fold kernel.
Polynomial reduce_serial(const Polynomial& a, const Modulus& m);

bool residues_equal(const Polynomial& a, const Polynomial& b, const Modulus& m);

}  // namespace qfp
