#include "qfp/kernels.hpp"
#include "qfp/sequences.hpp"
#include "qfp/verifier.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>

namespace qfp {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int alternating_sign(std::int64_t j) { return j % 2 == 0 ? 1 : -1; }

std::size_t as_exponent(std::int64_t e) {
  if (e < 0) throw std::logic_error("negative exponent in identity sum");
  return static_cast<std::size_t>(e);
}

VerificationReport identity_report(Claim claim, std::string id, std::int64_t n, Polynomial recurrence,
                                   Polynomial summed, bool oracle_agreed,
                                   std::chrono::nanoseconds elapsed) {
  VerificationReport r;
  r.claim = claim;
  r.claim_id = std::move(id);
  r.params["n"] = n;
  r.oracle_agreed = oracle_agreed;
  if (!oracle_agreed) r.note = "alternating form disagrees with the recurrence";
  r.lhs = std::move(recurrence);
  r.rhs = std::move(summed);
  r.passed = (r.lhs == r.rhs) && r.oracle_agreed;
  r.elapsed = elapsed;
  return r;
}

// sum_j (-1)^j q^(j(5j+1)/2) [n, floor((n-5j)/2)]; row must be row n.
Polynomial first_alternating_sum(const BinomialRow& row) {
  const std::int64_t n = row.n();
  Polynomial sum;
  for (std::int64_t j = -(n / 5) - 2; j <= n / 5 + 2; ++j) {
    const std::int64_t lower = floor_div(n - 5 * j, 2);
    if (lower < 0 || lower > n) continue;
    sum.add_shifted(row.at(lower), as_exponent(j * (5 * j + 1) / 2), alternating_sign(j));
  }
  return sum;
}

// sum_j (-1)^j q^(j(5j-3)/2) [n+1, floor((n+1-5j)/2) + 1]; row must be row n+1.
Polynomial second_alternating_sum(const BinomialRow& row) {
  const std::int64_t top = row.n();
  Polynomial sum;
  for (std::int64_t j = -(top / 5) - 2; j <= top / 5 + 2; ++j) {
    const std::int64_t lower = floor_div(top - 5 * j, 2) + 1;
    if (lower < 0 || lower > top) continue;
    sum.add_shifted(row.at(lower), as_exponent(j * (5 * j - 3) / 2), alternating_sign(j));
  }
  return sum;
}

// a(q) = even(q^2) + q * odd(q^2)
std::array<Polynomial, 2> split_parity(const Polynomial& a) {
  std::vector<Integer> even((a.size() + 1) / 2), odd(a.size() / 2);
  for (std::size_t i = 0; i < a.size(); ++i) (i % 2 == 0 ? even[i / 2] : odd[i / 2]) = a.coeffs()[i];
  return {Polynomial(std::move(even)), Polynomial(std::move(odd))};
}

Polynomial merge_parity(const Polynomial& even, const Polynomial& odd) {
  std::vector<Integer> out(std::max(2 * even.size(), 2 * odd.size()));
  for (std::size_t i = 0; i < even.size(); ++i) out[2 * i] = even.coeffs()[i];
  for (std::size_t i = 0; i < odd.size(); ++i) out[2 * i + 1] = odd.coeffs()[i];
  return Polynomial(std::move(out));
}

// U_s(N) = sum_k (-q^(2s+1))^k [N, k]_{q^2} kernel(N - k + s). Splitting
// [N, k] by the Pascal rule in base q^2 gives
//   U_s(N) = -q^(2s+1) U_s(N-1) + U_{s+1}(N-1),  U_s(0) = kernel(s),
// and the doubled sum at N is U_0(N). Updating ascending in s, U_{s+1} is
// still the previous row when it is read.
// cur <- up - q^shift * cur, in place. Descending i reads cur[i - shift]
// before it is overwritten.
void ladder_step(std::vector<Integer>& cur, std::span<const Integer> up, std::size_t shift) {
  const std::size_t old = cur.size();
  cur.resize(std::max(up.size(), old == 0 ? 0 : old + shift));
  for (std::size_t i = cur.size(); i-- > 0;) {
    const Integer* low = (i >= shift && i - shift < old) ? &cur[i - shift] : nullptr;
    if (i < up.size()) {
      if (low) {
        mpz_sub(cur[i].get_mpz_t(), up[i].get_mpz_t(), low->get_mpz_t());
      } else {
        cur[i] = up[i];
      }
    } else if (low) {
      mpz_neg(cur[i].get_mpz_t(), low->get_mpz_t());
    } else {
      cur[i] = 0;
    }
  }
  while (!cur.empty() && cur.back() == 0) cur.pop_back();
}

std::vector<Polynomial> doubled_ladder(const std::vector<Polynomial>& kernel, std::int64_t top) {
  std::vector<std::vector<Integer>> u;
  for (std::int64_t s = 0; s <= top; ++s) {
    const auto c = kernel[static_cast<std::size_t>(s)].coeffs();
    u.emplace_back(c.begin(), c.end());
  }
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(top) + 1);
  out.emplace_back(u[0]);
  for (std::int64_t big_n = 1; big_n <= top; ++big_n) {
    for (std::int64_t s = 0; s + big_n <= top; ++s) {
      const auto i = static_cast<std::size_t>(s);
      ladder_step(u[i], u[i + 1], static_cast<std::size_t>(2 * s + 1));
    }
    out.emplace_back(u[0]);
  }
  return out;
}

}  // namespace

std::vector<VerificationReport> fibonacci_identity_sweep(std::int64_t n_lo, std::int64_t n_hi,
                                                         bool first_form, bool second_form) {
  if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("fibonacci_identity_sweep: bad range");
  const auto span = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<Polynomial> positive(first_form ? span : 0);
  std::vector<Polynomial> positive_hat(second_form ? span : 0);
  std::vector<VerificationReport> first_reports, second_reports;

  SequenceIterator fib(SequenceVariant::fib_schur);
  SequenceIterator fib_hat(SequenceVariant::fib_hat);
  BinomialRow row;
  auto mark = Clock::now();
  auto lap = [&mark] {
    const auto now = Clock::now();
    const auto d = std::chrono::duration_cast<std::chrono::nanoseconds>(now - mark);
    mark = now;
    return d;
  };

  for (std::int64_t r = 0; r <= n_hi + 1; ++r) {
    if (r > 0) row = row.next();

    // Row r supplies the j-th positive term of index n = r + j.
    for (std::int64_t j = 0; j <= r; ++j) {
      const std::int64_t n = r + j;
      if (n < n_lo) continue;
      if (n > n_hi) break;
      const auto slot = static_cast<std::size_t>(n - n_lo);
      if (first_form) positive[slot].add_shifted(row.at(j), as_exponent(j * j));
      if (second_form) positive_hat[slot].add_shifted(row.at(j), as_exponent(j * j + j));
    }

    if (first_form && r >= n_lo && r <= n_hi) {
      const auto slot = static_cast<std::size_t>(r - n_lo);
      fib.advance_to(r + 1);
      const bool oracle = first_alternating_sum(row) == fib.current();
      first_reports.push_back(identity_report(Claim::identity2_1, "identity(2.1)", r, fib.current(),
                                              std::move(positive[slot]), oracle, lap()));
      positive[slot] = Polynomial{};
    }
    const std::int64_t n_second = r - 1;
    if (second_form && n_second >= n_lo && n_second <= n_hi) {
      const auto slot = static_cast<std::size_t>(n_second - n_lo);
      fib_hat.advance_to(n_second + 1);
      const bool oracle = second_alternating_sum(row) == fib_hat.current();
      second_reports.push_back(identity_report(Claim::identity2_2, "identity(2.2)", n_second,
                                               fib_hat.current(), std::move(positive_hat[slot]),
                                               oracle, lap()));
      positive_hat[slot] = Polynomial{};
    }
  }

  std::vector<VerificationReport> out = std::move(first_reports);
  out.insert(out.end(), std::make_move_iterator(second_reports.begin()),
             std::make_move_iterator(second_reports.end()));
  return out;
}

VerificationReport check_identity_2_1(std::int64_t n) {
  return std::move(fibonacci_identity_sweep(n, n, true, false).front());
}

VerificationReport check_identity_2_2(std::int64_t n) {
  return std::move(fibonacci_identity_sweep(n, n, false, true).front());
}

PellIdentityContext::PellIdentityContext(std::int64_t max_n)
    : max_n_(max_n), table_(max_n < 0 ? 0 : max_n + 1) {
  if (max_n < 0) throw std::invalid_argument("PellIdentityContext: negative bound");
  const std::int64_t top = max_n + 1;

  kernel_.resize(static_cast<std::size_t>(top) + 1);
  kernel_hat_.resize(static_cast<std::size_t>(top) + 1);
  std::optional<BinomialRow> streamed;
  for (std::int64_t big_m = 0; big_m <= top; ++big_m) {
    const std::int64_t row_n = 2 * big_m;
    const BinomialRow* row = nullptr;
    if (row_n <= top) {
      row = &table_.row(row_n);
    } else {
      if (!streamed) streamed = table_.row(top);
      while (streamed->n() < row_n) streamed = streamed->next();
      row = &*streamed;
    }
    Polynomial plain, hat;
    for (std::int64_t j = -(big_m / 4) - 1; j <= big_m / 4 + 1; ++j) {
      const std::int64_t lower = big_m - 4 * j - 1;
      if (lower < 0 || lower > row_n) continue;
      const Polynomial& b = row->at(lower);
      plain.add_shifted(b, as_exponent(4 * j * j), alternating_sign(j));
      hat.add_shifted(b, as_exponent(4 * j * j + 2 * j), alternating_sign(j));
    }
    kernel_[static_cast<std::size_t>(big_m)] = std::move(plain);
    kernel_hat_[static_cast<std::size_t>(big_m)] = std::move(hat);
  }

  doubled_ = doubled_ladder(kernel_, top);
  doubled_hat_ = doubled_ladder(kernel_hat_, top);

  SequenceIterator pell(SequenceVariant::pell);
  SequenceIterator pell_hat(SequenceVariant::pell_hat);
  for (std::int64_t n = 0; n <= top; ++n) {
    pell.advance_to(n);
    pell_hat.advance_to(n);
    pell_.push_back(pell.current());
    pell_hat_.push_back(pell_hat.current());
  }
}

const Polynomial& PellIdentityContext::alternating_kernel(std::int64_t big_m, bool hat) const {
  if (big_m < 0 || big_m > max_n_ + 1) throw std::out_of_range("alternating_kernel: index");
  const auto& v = hat ? kernel_hat_ : kernel_;
  return v[static_cast<std::size_t>(big_m)];
}

// With m = 4j+1 the second binomial of t1(N, m) at summation index k is
// [2(N-k), (N-k) - 4j - 1], which depends on N - k and j only. Swapping the
// two finite sums gives sum_k (-q)^k [N, k]_{q^2} * kernel(N - k).
const Polynomial& PellIdentityContext::doubled_alternating_sum(std::int64_t big_n, bool hat) const {
  if (big_n < 0 || big_n > max_n_ + 1) throw std::out_of_range("doubled_alternating_sum: index");
  return (hat ? doubled_hat_ : doubled_)[static_cast<std::size_t>(big_n)];
}

Polynomial PellIdentityContext::doubled_alternating_sum_products(std::int64_t big_n, bool hat) const {
  if (big_n < 0 || big_n > max_n_ + 1) throw std::out_of_range("doubled_alternating_sum: index");
  // [N, k]_{q^2} has only even exponents, so with kernel = e(q^2) + q o(q^2)
  // each term splits into two half-length products in the variable q^2.
  std::vector<std::array<Polynomial, 2>> parts;
  for (std::int64_t m = 0; m <= big_n; ++m) parts.push_back(split_parity(alternating_kernel(m, hat)));
  std::vector<kernels::ProductTerm> even, odd;
  for (std::int64_t k = 0; k <= big_n; ++k) {
    const auto& [ke, ko] = parts[static_cast<std::size_t>(big_n - k)];
    const auto b = table_.at(big_n, k).coeffs();
    const int sign = alternating_sign(k);
    const auto half = static_cast<std::size_t>(k / 2);
    if (k % 2 == 0) {
      even.push_back({b, ke.coeffs(), half, sign});
      odd.push_back({b, ko.coeffs(), half, sign});
    } else {
      odd.push_back({b, ke.coeffs(), half, sign});
      even.push_back({b, ko.coeffs(), half + 1, sign});
    }
  }
  return merge_parity(Polynomial(kernels::sum_of_products(even)), Polynomial(kernels::sum_of_products(odd)));
}

Polynomial PellIdentityContext::doubled_alternating_sum_direct(std::int64_t big_n, bool hat) const {
  if (big_n < 0 || big_n > max_n_ + 1) throw std::out_of_range("doubled_alternating_sum: index");
  Polynomial sum;
  for (std::int64_t k = 0; k <= big_n; ++k) {
    const Polynomial& kernel = alternating_kernel(big_n - k, hat);
    if (kernel.is_zero()) continue;
    sum.add_shifted(substitute_power(table_.at(big_n, k), 2) * kernel, static_cast<std::size_t>(k),
                    alternating_sign(k));
  }
  return sum;
}

// The weights (j^2+j+k^2-k)/2 and (j^2+j+k^2+k)/2 share the j part, so the
// sum over j is formed once per k. [j, k][n-k, j] = [n-k, k][n-2k, j-k] pulls
// a common factor out of it, leaving one product per k.
Polynomial PellIdentityContext::double_sum_inner(std::int64_t n, std::int64_t k) const {
  if (n < 0 || n > max_n_ || k < 0 || 2 * k > n) throw std::out_of_range("double_sum_inner: index");
  const std::int64_t rest = n - 2 * k;
  Polynomial tail;
  for (std::int64_t j = k; j <= n - k; ++j) {
    tail.add_shifted(table_.at(rest, j - k), as_exponent((j * j + j) / 2));
  }
  return table_.at(n - k, k) * tail;
}

Polynomial PellIdentityContext::double_sum_inner_literal(std::int64_t n, std::int64_t k) const {
  if (n < 0 || n > max_n_ || k < 0 || 2 * k > n) throw std::out_of_range("double_sum_inner: index");
  Polynomial inner;
  for (std::int64_t j = k; j <= n - k; ++j) {
    inner.add_shifted(table_.at(j, k) * table_.at(n - k, j), as_exponent((j * j + j) / 2));
  }
  return inner;
}

std::array<VerificationReport, 2> PellIdentityContext::check(std::int64_t n) const {
  if (n < 0 || n > max_n_) throw std::out_of_range("PellIdentityContext::check: index");
  const auto start = Clock::now();

  Polynomial plain, hat;
  for (std::int64_t k = 0; 2 * k <= n; ++k) {
    const Polynomial inner = double_sum_inner(n, k);
    plain.add_shifted(inner, as_exponent((k * k - k) / 2));
    hat.add_shifted(inner, as_exponent((k * k + k) / 2));
  }

  const std::int64_t big_n = n + 1;
  const Polynomial& recurrence = pell_[static_cast<std::size_t>(big_n)];
  const Polynomial& recurrence_hat = pell_hat_[static_cast<std::size_t>(big_n)];
  const bool oracle = doubled_alternating_sum(big_n, false) == substitute_power(recurrence, 2);
  const bool oracle_hat = doubled_alternating_sum(big_n, true) == substitute_power(recurrence_hat, 2);
  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);

  return {identity_report(Claim::identity3_1, "identity(3.1)", n, recurrence, std::move(plain), oracle,
                          elapsed),
          identity_report(Claim::identity3_2, "identity(3.2)", n, recurrence_hat, std::move(hat),
                          oracle_hat, elapsed)};
}

VerificationReport check_identity_3_1(std::int64_t n) { return PellIdentityContext(n).check(n)[0]; }
VerificationReport check_identity_3_2(std::int64_t n) { return PellIdentityContext(n).check(n)[1]; }

}  // namespace qfp
