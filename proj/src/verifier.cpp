#include "qfp/verifier.hpp"

#include "qfp/congruence.hpp"
#include "qfp/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfp {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::pair<Claim, std::string_view>, 12> kRegistry{{
    {Claim::thm1_1, "thm1.1"},
    {Claim::thm1_2, "thm1.2"},
    {Claim::thm1_3, "thm1.3"},
    {Claim::classical, "classical"},
    {Claim::lemma2_1, "lemma2.1"},
    {Claim::lemma2_2, "lemma2.2"},
    {Claim::lemma3_2, "lemma3.2"},
    {Claim::qbinom_facts, "qbinom-facts"},
    {Claim::identity2_1, "identity2.1"},
    {Claim::identity2_2, "identity2.2"},
    {Claim::identity3_1, "identity3.1"},
    {Claim::identity3_2, "identity3.2"},
}};

constexpr std::array<Claim, 12> kAllClaims{
    Claim::thm1_1,       Claim::thm1_2,      Claim::thm1_3,      Claim::classical,
    Claim::lemma2_1,     Claim::lemma2_2,    Claim::lemma3_2,    Claim::qbinom_facts,
    Claim::identity2_1,  Claim::identity2_2, Claim::identity3_1, Claim::identity3_2,
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// x(x-1)/2, read as a polynomial in x so negative x is allowed.
std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
  if (a % b != 0) throw std::logic_error(std::string(what) + ": exponent is not integral");
  return a / b;
}

// (1 + s) / 2 for s in {-1, 1}.
Integer half_of(int numerator) {
  if (numerator % 2 != 0) throw std::logic_error("constant term is not integral");
  return Integer(numerator / 2);
}

VerificationReport make_report(Claim claim, std::string claim_id, std::int64_t p) {
  VerificationReport r;
  r.claim = claim;
  r.claim_id = std::move(claim_id);
  r.params["p"] = p;
  return r;
}

void settle(VerificationReport& r, Polynomial lhs, Polynomial rhs, Clock::time_point start) {
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.passed = (r.lhs == r.rhs) && r.oracle_agreed;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

// Compares reduce(a) with reduce(b) modulo m.
VerificationReport congruence_report(Claim claim, std::string id, std::int64_t p,
                                     const Polynomial& a, const Polynomial& b, const Modulus& m,
                                     Clock::time_point start) {
  auto r = make_report(claim, std::move(id), p);
  settle(r, reduce(a, m).rep(), reduce(b, m).rep(), start);
  return r;
}

void require_not_five(const PrimeContext& ctx, const char* what) {
  if (ctx.p() == 5) throw std::invalid_argument(std::string(what) + ": requires p != 5");
}

}  // namespace

std::span<const Claim> all_claims() { return kAllClaims; }

std::string_view claim_name(Claim c) {
  for (const auto& [claim, name] : kRegistry) {
    if (claim == c) return name;
  }
  return "?";
}

std::optional<Claim> parse_claim(std::string_view name) {
  for (const auto& [claim, known] : kRegistry) {
    if (known == name) return claim;
  }
  return std::nullopt;
}

bool is_prime_claim(Claim c) {
  switch (c) {
    case Claim::identity2_1:
    case Claim::identity2_2:
    case Claim::identity3_1:
    case Claim::identity3_2:
      return false;
    default:
      return true;
  }
}

VerificationReport skipped_report(Claim claim, std::string claim_id, std::int64_t p, std::string note) {
  auto r = make_report(claim, std::move(claim_id), p);
  r.skipped = true;
  r.passed = true;
  r.note = std::move(note);
  return r;
}

Polynomial concat_blocks(std::span<const Polynomial> parts, std::size_t block) {
  Polynomial out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].is_zero() && static_cast<std::size_t>(parts[i].degree()) >= block) {
      throw std::invalid_argument("concat_blocks: part does not fit its block");
    }
    out.add_shifted(parts[i], i * block);
  }
  return out;
}

std::array<VerificationReport, 2> verify_thm_1_1(const PrimeContext& ctx) {
  require_not_five(ctx, "verify_thm_1_1");
  const auto start = Clock::now();
  const std::int64_t p = ctx.p();
  const Modulus m(p, 1);
  SequenceIterator fib(SequenceVariant::fib_schur);
  fib.advance_to(p + 1);
  const Polynomial& f_p = fib.previous();
  const Polynomial& f_p1 = fib.current();

  const auto exponent = exact_div((5 - *ctx.alpha()) * p + 1, 5, "thm1.1");
  auto r4 = congruence_report(Claim::thm1_1, "thm1.1/(1.4)", p, f_p1,
                              Polynomial::constant(half_of(1 + ctx.legendre5())), m, start);
  auto r5 = congruence_report(Claim::thm1_1, "thm1.1/(1.5)", p, f_p,
                              Polynomial::monomial(ctx.legendre5(), static_cast<std::size_t>(exponent)),
                              m, start);
  return {std::move(r4), std::move(r5)};
}

std::array<VerificationReport, 2> verify_thm_1_2(const PrimeContext& ctx) {
  require_not_five(ctx, "verify_thm_1_2");
  const auto start = Clock::now();
  const std::int64_t p = ctx.p();
  const Modulus m(p, 1);
  SequenceIterator fib(SequenceVariant::fib_hat);
  fib.advance_to(p - 1);
  const Polynomial f_pm1 = fib.current();
  fib.advance();
  const Polynomial& f_p = fib.current();

  const auto exponent = exact_div(*ctx.alpha() * p - 1, 5, "thm1.2");
  auto r6 = congruence_report(Claim::thm1_2, "thm1.2/(1.6)", p, f_pm1,
                              Polynomial::constant(half_of(1 - ctx.legendre5())), m, start);
  auto r7 = congruence_report(Claim::thm1_2, "thm1.2/(1.7)", p, f_p,
                              Polynomial::monomial(ctx.legendre5(), static_cast<std::size_t>(exponent)),
                              m, start);
  return {std::move(r6), std::move(r7)};
}

std::array<VerificationReport, 3> verify_thm_1_3(const PrimeContext& ctx) {
  const auto start = Clock::now();
  const std::int64_t p = ctx.p();
  const Modulus base(p, 1);
  const Modulus doubled(p, 2);
  const auto e = static_cast<std::size_t>(exact_div(p * p - 1, 8, "thm1.3"));
  const Polynomial sign = Polynomial::constant(ctx.legendre2());

  SequenceIterator pell(SequenceVariant::pell);
  pell.advance_to(p + 1);
  SequenceIterator pell_hat(SequenceVariant::pell_hat);
  pell_hat.advance_to(p + 1);
  const Polynomial& pell_p = pell.previous();
  const Polynomial& pell_hat_p = pell_hat.previous();
  const Polynomial pell_diff = pell.current() - pell.previous();
  const Polynomial pell_hat_diff = pell_hat.current() - pell_hat.previous();

  auto sq = [](const Polynomial& a) { return substitute_power(a, 2); };

  // Base q.
  const Polynomial lhs9 = reduce(monomial_mul(pell_p, static_cast<std::int64_t>(e)), base).rep();
  const Polynomial rhs9 = reduce(sign, base).rep();
  const Polynomial lhs10 = reduce(pell_hat_p, base).rep();
  const Polynomial rhs10 = reduce(Polynomial::monomial(ctx.legendre2(), e), base).rep();
  const auto block = static_cast<std::size_t>(base.degree());
  const std::array diffs{reduce(pell_diff, base).rep(), reduce(pell_hat_diff, base).rep()};
  const std::array ones{reduce(Polynomial{1}, base).rep(), reduce(Polynomial{1}, base).rep()};

  // Doubled forms modulo [p]_{q^2}.
  const bool doubled9 = residues_equal(monomial_mul(sq(pell_p), static_cast<std::int64_t>(2 * e)), sign, doubled);
  const bool doubled10 = residues_equal(sq(pell_hat_p), Polynomial::monomial(ctx.legendre2(), 2 * e), doubled);
  const bool doubled11 = residues_equal(sq(pell_diff), Polynomial{1}, doubled) &&
                         residues_equal(sq(pell_hat_diff), Polynomial{1}, doubled);

  auto build = [&](std::string id, Polynomial lhs, Polynomial rhs, bool doubled_verdict) {
    auto r = make_report(Claim::thm1_3, std::move(id), p);
    r.oracle_agreed = (lhs == rhs) == doubled_verdict;
    if (!r.oracle_agreed) r.note = "base-q and doubled verdicts disagree";
    settle(r, std::move(lhs), std::move(rhs), start);
    return r;
  };
  return {build("thm1.3/(1.9)", lhs9, rhs9, doubled9),
          build("thm1.3/(1.10)", lhs10, rhs10, doubled10),
          build("thm1.3/(1.11)", concat_blocks(diffs, block), concat_blocks(ones, block), doubled11)};
}

std::vector<VerificationReport> verify_classical(const PrimeContext& ctx) {
  const auto start = Clock::now();
  const std::int64_t p = ctx.p();
  const Integer modulus(static_cast<long>(p));
  auto residue = [&](const Integer& v) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return Polynomial::constant(r);
  };
  auto report = [&](std::string id, const Integer& value, const Integer& expected) {
    auto r = make_report(Claim::classical, std::move(id), p);
    settle(r, residue(value), residue(expected), start);
    return r;
  };

  std::vector<VerificationReport> out;
  if (p == 5) {
    for (const char* id : {"classical/(1.1)", "classical/(1.2)", "classical/(1.3)"}) {
      out.push_back(skipped_report(Claim::classical, id, p, "p = 5 excluded"));
    }
  } else {
    const int l5 = ctx.legendre5();
    out.push_back(report("classical/(1.1)", classical_fib(p), l5));
    out.push_back(report("classical/(1.2)", classical_fib(p + 1), half_of(1 + l5)));
    out.push_back(report("classical/(1.3)", classical_fib(p - 1), half_of(1 - l5)));
  }
  out.push_back(report("classical/(1.8)", classical_pell(p), ctx.legendre2()));
  return out;
}

VerificationReport check_lemma_2_1(std::int64_t p, std::int64_t j_range) {
  const PrimeContext ctx(p);
  require_not_five(ctx, "check_lemma_2_1");
  const auto start = Clock::now();
  auto big_l = [p](std::int64_t j) {
    return j * (5 * j + 1) / 2 - choose2(floor_div(p - 1 - 5 * j, 2) + 1);
  };
  auto big_l_hat = [p](std::int64_t j) {
    return j * (5 * j - 3) / 2 - choose2(floor_div(p - 1 - 5 * j, 2) + 2);
  };
  std::vector<Integer> observed;
  for (std::int64_t j = -j_range; j <= j_range; ++j) {
    observed.emplace_back(static_cast<long>(big_l(2 * j) - big_l(2 * j - 1)));
  }
  for (std::int64_t j = -j_range; j <= j_range; ++j) {
    observed.emplace_back(static_cast<long>(big_l_hat(2 * j) - big_l_hat(2 * j - 1)));
  }
  std::vector<Integer> expected(observed.size(), Integer(static_cast<long>(p)));

  auto r = make_report(Claim::lemma2_1, "lemma2.1", p);
  r.params["j_range"] = j_range;
  settle(r, Polynomial(std::move(observed)), Polynomial(std::move(expected)), start);
  return r;
}

VerificationReport check_lemma_2_2(std::int64_t p) {
  const PrimeContext ctx(p);
  require_not_five(ctx, "check_lemma_2_2");
  const auto start = Clock::now();
  // Indicator of j in [-p, p] at exponent j + p; the hatted set occupies the
  // next block of 2p + 1 exponents.
  const std::int64_t width = 2 * p + 1;
  std::vector<Integer> scanned(static_cast<std::size_t>(2 * width));
  std::vector<Integer> closed(static_cast<std::size_t>(2 * width));
  auto slot = [&](std::int64_t j, bool hat) {
    return static_cast<std::size_t>(j + p + (hat ? width : 0));
  };
  for (std::int64_t j = -p; j <= p; ++j) {
    const std::int64_t f = floor_div(p - 1 - 5 * j, 2);
    if (0 <= f && f <= p - 1) scanned[slot(j, false)] = 1;
    if (0 <= f + 1 && f + 1 <= p - 1) scanned[slot(j, true)] = 1;
  }
  const std::int64_t k = p / 5;
  std::int64_t hat_lo = -k, hat_hi = k;
  if (p % 5 == 1) hat_lo = -k + 1;
  if (p % 5 == 4) hat_hi = k + 1;
  for (std::int64_t j = -k; j <= k; ++j) closed[slot(j, false)] = 1;
  for (std::int64_t j = hat_lo; j <= hat_hi; ++j) closed[slot(j, true)] = 1;

  auto r = make_report(Claim::lemma2_2, "lemma2.2", p);
  settle(r, Polynomial(std::move(scanned)), Polynomial(std::move(closed)), start);
  return r;
}

VerificationReport check_lemma_3_2(std::int64_t p) {
  const auto start = Clock::now();
  const Modulus m(p, 2);
  Polynomial rhs{1};
  rhs.add_shifted(Polynomial{1}, static_cast<std::size_t>(p));
  return congruence_report(Claim::lemma3_2, "lemma3.2", p, q_binomial_product(2 * p + 2, p), rhs, m, start);
}

std::vector<VerificationReport> check_qbinom_congruence_facts(std::int64_t p) {
  const Modulus base(p, 1);
  const Modulus doubled(p, 2);
  std::vector<VerificationReport> out;

  auto run = [&](std::string id, std::int64_t row_n, const Modulus& m, auto selected, auto expected) {
    const auto start = Clock::now();
    const BinomialRow row = BinomialRow::by_product(row_n);
    std::vector<Polynomial> observed, wanted;
    for (std::int64_t k = 0; k <= row_n; ++k) {
      if (!selected(k)) continue;
      observed.push_back(reduce(row.at(k), m).rep());
      wanted.push_back(reduce(expected(k), m).rep());
    }
    const auto block = static_cast<std::size_t>(m.degree());
    auto r = make_report(Claim::qbinom_facts, std::move(id), p);
    settle(r, concat_blocks(observed, block), concat_blocks(wanted, block), start);
    out.push_back(std::move(r));
  };

  run("qbinom-facts/(a)", p, base, [](std::int64_t) { return true; },
      [p](std::int64_t k) { return (k == 0 || k == p) ? Polynomial{1} : Polynomial{}; });
  run("qbinom-facts/(b)", 2 * p, doubled, [p](std::int64_t k) { return k % p != 0; },
      [](std::int64_t) { return Polynomial{}; });
  const std::array<std::int64_t, 9> allowed{0, 1, 2, p, p + 1, p + 2, 2 * p, 2 * p + 1, 2 * p + 2};
  run("qbinom-facts/(c)", 2 * p + 2, doubled,
      [&allowed](std::int64_t k) { return std::find(allowed.begin(), allowed.end(), k) == allowed.end(); },
      [](std::int64_t) { return Polynomial{}; });
  return out;
}

}  // namespace qfp
