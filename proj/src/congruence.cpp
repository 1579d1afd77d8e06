#include "qfp/congruence.hpp"

#include "qfp/kernels.hpp"
#include "qfp/numtheory.hpp"
#include "qfp/qcomb.hpp"

#include <stdexcept>
#include <string>

namespace qfp {

Modulus::Modulus(std::int64_t p, int base_power) : p_(p), base_power_(base_power) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("Modulus: " + std::to_string(p) + " is not an odd prime");
  }
  if (base_power != 1 && base_power != 2) {
    throw std::invalid_argument("Modulus: base_power must be 1 or 2");
  }
  poly_ = substitute_power(q_int(p), base_power);
}

Residue::Residue(Modulus modulus, Polynomial rep) : modulus_(std::move(modulus)), rep_(std::move(rep)) {
  if (!rep_.is_zero() && rep_.degree() >= modulus_.degree()) {
    throw std::invalid_argument("Residue: representative is not reduced");
  }
}

Residue reduce(const Polynomial& a, const Modulus& m) {
  const auto period = static_cast<std::size_t>(m.period());
  Polynomial folded(kernels::fold_exponents(a.coeffs(), period));
  return Residue(m, divrem_monic(folded, m.poly()).remainder);
}

Polynomial reduce_serial(const Polynomial& a, const Modulus& m) {
  const auto period = static_cast<std::size_t>(m.period());
  Polynomial folded(kernels::fold_exponents_serial(a.coeffs(), period));
  return divrem_monic(folded, m.poly()).remainder;
}

Polynomial reduce_by_division(const Polynomial& a, const Modulus& m) {
  return divrem_monic(a, m.poly()).remainder;
}

bool residues_equal(const Polynomial& a, const Polynomial& b, const Modulus& m) {
  return reduce(a, m).rep() == reduce(b, m).rep();
}

}  // namespace qfp
