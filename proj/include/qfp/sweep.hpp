#pragma once

#include "qfp/polynomial.hpp"
#include "qfp/verifier.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qfp {

struct SweepConfig {
  std::vector<Claim> claims;
  std::int64_t p_max = 200;
  std::int64_t n_max = 200;
  int jobs = 1;
};

/// Runs every selected claim over the odd primes <= p_max (prime claims) or
/// 0 <= n <= n_max (identities). Instances are evaluated concurrently on
/// `jobs` threads; the result is ordered by claim (registry order), then by
/// parameter, independent of scheduling.
std::vector<VerificationReport> run_sweep(const SweepConfig& config);

/// Canonical residues mod [p]_q summarizing the congruence theorems for one
/// prime. The Fibonacci entries and alpha are empty for p = 5.
struct ResidueTableRow {
  std::int64_t p = 0;
  int legendre5 = 0;
  int legendre2 = 0;
  std::optional<int> alpha;
  std::optional<Polynomial> fib_p;
  std::optional<Polynomial> fib_p_plus_1;
  std::optional<Polynomial> fib_hat_p_minus_1;
  std::optional<Polynomial> fib_hat_p;
  Polynomial pell_p_scaled;  // q^((p^2-1)/8) * P_p
  Polynomial pell_hat_p;
  Polynomial pell_diff;      // P_{p+1} - P_p
  Polynomial pell_hat_diff;  // hatted analogue
};

ResidueTableRow residue_table_row(std::int64_t p);
std::vector<ResidueTableRow> residue_table(std::int64_t p_max, int jobs = 1);

}  // namespace qfp
