#include "qfp/sweep.hpp"

#include "qfp/congruence.hpp"
#include "qfp/numtheory.hpp"
#include "qfp/sequences.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <functional>
#include <memory>
#include <stdexcept>

namespace qfp {

namespace {

using Job = std::function<std::vector<VerificationReport>()>;

template <std::size_t N>
std::vector<VerificationReport> to_vector(std::array<VerificationReport, N>&& reports) {
  return {std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end())};
}

std::vector<VerificationReport> skipped_pair(Claim claim, const char* first, const char* second,
                                             std::int64_t p) {
  return {skipped_report(claim, first, p, "p = 5 excluded"),
          skipped_report(claim, second, p, "p = 5 excluded")};
}

std::vector<VerificationReport> run_prime_claim(Claim claim, std::int64_t p) {
  switch (claim) {
    case Claim::thm1_1:
      if (p == 5) return skipped_pair(claim, "thm1.1/(1.4)", "thm1.1/(1.5)", p);
      return to_vector(verify_thm_1_1(PrimeContext(p)));
    case Claim::thm1_2:
      if (p == 5) return skipped_pair(claim, "thm1.2/(1.6)", "thm1.2/(1.7)", p);
      return to_vector(verify_thm_1_2(PrimeContext(p)));
    case Claim::thm1_3:
      return to_vector(verify_thm_1_3(PrimeContext(p)));
    case Claim::classical:
      return verify_classical(PrimeContext(p));
    case Claim::lemma2_1:
      if (p == 5) return {skipped_report(claim, "lemma2.1", p, "p = 5 excluded")};
      return {check_lemma_2_1(p, p)};
    case Claim::lemma2_2:
      if (p == 5) return {skipped_report(claim, "lemma2.2", p, "p = 5 excluded")};
      return {check_lemma_2_2(p)};
    case Claim::lemma3_2:
      return {check_lemma_3_2(p)};
    case Claim::qbinom_facts:
      return check_qbinom_congruence_facts(p);
    default:
      throw std::logic_error("run_prime_claim: not a prime claim");
  }
}

bool selected(const std::vector<Claim>& claims, Claim c) {
  return std::find(claims.begin(), claims.end(), c) != claims.end();
}

std::vector<VerificationReport> run_jobs(const std::vector<Job>& jobs, int threads) {
  std::vector<std::vector<VerificationReport>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
  // With a single thread no team is formed, so the kernels keep their own
  // parallelism.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)]();
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<VerificationReport> out;
  for (auto& batch : results) {
    out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return out;
}

}  // namespace

std::vector<VerificationReport> run_sweep(const SweepConfig& config) {
  if (config.p_max < 0 || config.n_max < 0) throw std::invalid_argument("run_sweep: negative bound");
  const int threads = std::max(1, config.jobs);
  const auto primes = odd_primes_up_to(config.p_max);

  std::vector<Job> jobs;
  for (Claim claim : all_claims()) {
    if (!selected(config.claims, claim) || !is_prime_claim(claim)) continue;
    for (std::int64_t p : primes) {
      jobs.emplace_back([claim, p] { return run_prime_claim(claim, p); });
    }
  }

  const bool want21 = selected(config.claims, Claim::identity2_1);
  const bool want22 = selected(config.claims, Claim::identity2_2);
  if (want21 || want22) {
    const std::int64_t n_max = config.n_max;
    jobs.emplace_back([=] { return fibonacci_identity_sweep(0, n_max, want21, want22); });
  }

  const bool want31 = selected(config.claims, Claim::identity3_1);
  const bool want32 = selected(config.claims, Claim::identity3_2);
  std::shared_ptr<const PellIdentityContext> pell;
  if (want31 || want32) {
    pell = std::make_shared<const PellIdentityContext>(config.n_max);
    // Largest n first so the expensive instances start early.
    for (std::int64_t n = config.n_max; n >= 0; --n) {
      jobs.emplace_back([=] {
        auto pair = pell->check(n);
        std::vector<VerificationReport> out;
        if (want31) out.push_back(std::move(pair[0]));
        if (want32) out.push_back(std::move(pair[1]));
        return out;
      });
    }
  }

  auto reports = run_jobs(jobs, threads);
  auto rank = [](const VerificationReport& r) { return static_cast<int>(r.claim); };
  auto param = [](const VerificationReport& r) {
    auto it = r.params.find(is_prime_claim(r.claim) ? "p" : "n");
    return it == r.params.end() ? std::int64_t{0} : it->second;
  };
  std::stable_sort(reports.begin(), reports.end(), [&](const auto& a, const auto& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return param(a) < param(b);
  });
  return reports;
}

ResidueTableRow residue_table_row(std::int64_t p) {
  const PrimeContext ctx(p);
  const Modulus m(p, 1);
  ResidueTableRow row;
  row.p = p;
  row.legendre5 = ctx.legendre5();
  row.legendre2 = ctx.legendre2();
  row.alpha = ctx.alpha();
  auto residue = [&](const Polynomial& a) { return reduce(a, m).rep(); };

  if (p != 5) {
    SequenceIterator fib(SequenceVariant::fib_schur);
    fib.advance_to(p + 1);
    row.fib_p = residue(fib.previous());
    row.fib_p_plus_1 = residue(fib.current());
    SequenceIterator fib_hat(SequenceVariant::fib_hat);
    fib_hat.advance_to(p);
    row.fib_hat_p_minus_1 = residue(fib_hat.previous());
    row.fib_hat_p = residue(fib_hat.current());
  }
  SequenceIterator pell(SequenceVariant::pell);
  pell.advance_to(p + 1);
  SequenceIterator pell_hat(SequenceVariant::pell_hat);
  pell_hat.advance_to(p + 1);
  row.pell_p_scaled = residue(monomial_mul(pell.previous(), (p * p - 1) / 8));
  row.pell_hat_p = residue(pell_hat.previous());
  row.pell_diff = residue(pell.current() - pell.previous());
  row.pell_hat_diff = residue(pell_hat.current() - pell_hat.previous());
  return row;
}

std::vector<ResidueTableRow> residue_table(std::int64_t p_max, int jobs) {
  const auto primes = odd_primes_up_to(p_max);
  std::vector<ResidueTableRow> rows(primes.size());
  const auto count = static_cast<std::int64_t>(primes.size());
  const int threads = std::max(1, jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::int64_t i = 0; i < count; ++i) {
    rows[static_cast<std::size_t>(i)] = residue_table_row(primes[static_cast<std::size_t>(i)]);
  }
  return rows;
}

}  // namespace qfp
