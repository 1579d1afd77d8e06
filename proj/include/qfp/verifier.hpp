#pragma once

#include "qfp/numtheory.hpp"
#include "qfp/polynomial.hpp"
#include "qfp/qcomb.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qfp {

// Registered claim families, in output order.
enum class Claim {
  thm1_1,
  thm1_2,
  thm1_3,
  classical,
  lemma2_1,
  lemma2_2,
  lemma3_2,
  qbinom_facts,
  identity2_1,
  identity2_2,
  identity3_1,
  identity3_2,
};

std::span<const Claim> all_claims();
std::string_view claim_name(Claim c);  // registry name, e.g. "thm1.1"
std::optional<Claim> parse_claim(std::string_view name);
// Claims parameterized by odd primes; the rest run over indices n.
bool is_prime_claim(Claim c);

/// Outcome of one claim instance.
///
/// lhs and rhs are canonical forms of the two sides being compared. When a
/// claim has an independent second route (a third form of an identity, or the
/// q -> q^2 doubled congruence), oracle_agreed records whether that route
/// matched. Always: passed == (lhs == rhs && oracle_agreed).
/// Skipped instances (p = 5 where a claim excludes it) carry zero sides and
/// count as passed.
struct VerificationReport {
  Claim claim = Claim::thm1_1;
  std::string claim_id;
  std::map<std::string, std::int64_t> params;
  bool passed = false;
  bool skipped = false;
  bool oracle_agreed = true;
  Polynomial lhs;
  Polynomial rhs;
  std::chrono::nanoseconds elapsed{0};
  std::string note;
};

VerificationReport skipped_report(Claim claim, std::string claim_id, std::int64_t p, std::string note);

// Lays parts out as consecutive blocks of `block` coefficients, so one
// comparison checks several residues. Every part must have degree < block.
Polynomial concat_blocks(std::span<const Polynomial> parts, std::size_t block);

// p != 5; throws std::invalid_argument for p = 5.
std::array<VerificationReport, 2> verify_thm_1_1(const PrimeContext& ctx);
std::array<VerificationReport, 2> verify_thm_1_2(const PrimeContext& ctx);
// Every odd prime, including 5. Includes the doubled (mod [p]_{q^2}) oracle.
std::array<VerificationReport, 3> verify_thm_1_3(const PrimeContext& ctx);

// Integer congruences mod p; the Fibonacci reports are skipped for p = 5.
std::vector<VerificationReport> verify_classical(const PrimeContext& ctx);

// L(2j) - L(2j-1) and its hatted analogue for |j| <= j_range; p != 5.
VerificationReport check_lemma_2_1(std::int64_t p, std::int64_t j_range);
// Index sets by membership scan versus their closed forms; p != 5.
VerificationReport check_lemma_2_2(std::int64_t p);
// [2p+2, p]_q mod [p]_{q^2}.
VerificationReport check_lemma_3_2(std::int64_t p);
// Three reports: [p, k] mod [p]_q, [2p, k] and [2p+2, k] mod [p]_{q^2}.
std::vector<VerificationReport> check_qbinom_congruence_facts(std::int64_t p);

/// Both Rogers-Ramanujan type finite forms for every n in [n_lo, n_hi], in a
/// single pass over Pascal rows 0..n_hi+1. Reports come back grouped by claim
/// (first form for all n, then the second), each group ascending in n.
std::vector<VerificationReport> fibonacci_identity_sweep(std::int64_t n_lo, std::int64_t n_hi,
                                                         bool first_form, bool second_form);

VerificationReport check_identity_2_1(std::int64_t n);
VerificationReport check_identity_2_2(std::int64_t n);

/// Shared state for the q-Pell identities at every n <= max_n: Pascal rows
/// 0..max_n+1, the reindexed alternating kernels for both weights, the doubled
/// alternating sums and the recurrence values. Immutable after construction;
/// check() is safe to call from several threads.
class PellIdentityContext {
 public:
  explicit PellIdentityContext(std::int64_t max_n);

  std::int64_t max_n() const noexcept { return max_n_; }

  // {plain, hat} reports for index n.
  std::array<VerificationReport, 2> check(std::int64_t n) const;

  // sum_j (-1)^j q^(weight(j)) [2M, M-4j-1]_q, weight 4j^2 (hat: 4j^2+2j).
  const Polynomial& alternating_kernel(std::int64_t big_m, bool hat) const;
  // sum_j (-1)^j q^(weight(j)) t1(N, 4j+1). Exchanging the two finite sums
  // inside t1 gives sum_k (-q)^k [N, k]_{q^2} kernel(N - k); every N <= max_n+1
  // is evaluated at construction by a shift-and-add ladder over k.
  const Polynomial& doubled_alternating_sum(std::int64_t big_n, bool hat) const;
  // The exchanged sum with one product per k, on even/odd kernel halves.
  Polynomial doubled_alternating_sum_products(std::int64_t big_n, bool hat) const;
  // Same products without the even/odd split.
  Polynomial doubled_alternating_sum_direct(std::int64_t big_n, bool hat) const;

  // sum_{j=k}^{n-k} q^((j^2+j)/2) [j, k] [n-k, j], with one factor pulled out
  // of the sum. The literal version multiplies every term; used in tests.
  Polynomial double_sum_inner(std::int64_t n, std::int64_t k) const;
  Polynomial double_sum_inner_literal(std::int64_t n, std::int64_t k) const;

 private:
  std::int64_t max_n_;
  BinomialTable table_;
  std::vector<Polynomial> kernel_;
  std::vector<Polynomial> kernel_hat_;
  std::vector<Polynomial> doubled_;
  std::vector<Polynomial> doubled_hat_;
  std::vector<Polynomial> pell_;
  std::vector<Polynomial> pell_hat_;
};

VerificationReport check_identity_3_1(std::int64_t n);
VerificationReport check_identity_3_2(std::int64_t n);

}  // namespace qfp
