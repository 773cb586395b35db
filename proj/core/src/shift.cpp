#include "cantor/shift.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "cantor/encode.hpp"
#include "cantor/errors.hpp"

namespace cantor {

ShiftState sigma_step(const ShiftState& state, const QTerm& qterm, Digit digit, const Integer& r) {
  if (digit < 0 || digit > qterm.base - 1)
    throw AdmissibilityError("digit " + std::to_string(digit) + " at step " +
                             std::to_string(state.k + 1) + " outside [0, " +
                             std::to_string(qterm.base - 1) + "]");
  Integer u = Integer(qterm.base) * state.u - Integer(qterm.sign) * Integer(digit) * r;
  if (abs(u) > r)
    throw DomainError("shift numerator |" + u.get_str() + "| exceeds the denominator " +
                      r.get_str() + " at step " + std::to_string(state.k + 1) + ": digit " +
                      std::to_string(digit) + " is not the extractor's digit for this state");
  return ShiftState{std::move(u), state.k + 1};
}

Rational sigma_n(const Rational& x, const Expansion& exp, std::uint64_t n) {
  ShiftState state{x.num(), 0};
  for (std::uint64_t k = 1; k <= n; ++k)
    state = sigma_step(state, exp.qsys().term(k), exp.digit(k), x.den());
  return Rational(state.u, x.den());
}

bool shift_identity_check(const Rational& x, const Expansion& exp, std::uint64_t n) {
  const Rational head = eval_finite(exp.qsys(), exp.unroll(n));
  const Rational tail = sigma_n(x, exp, n) / Rational(exp.qsys().partial_product(n));
  return x == head + tail;
}

namespace {

CycleReport gamma_string_report(const Rational& x, const QSystem& qsys, Check check) {
  Digits pre, per;
  for (std::uint64_t j = 1; j <= qsys.preperiod_length(); ++j)
    pre.push_back(gamma_digit(qsys.term(j)));
  for (std::uint64_t j = 1; j <= qsys.period_length(); ++j)
    per.push_back(gamma_digit(qsys.term(qsys.preperiod_length() + j)));
  Expansion exp = canonicalize(Expansion(qsys, std::move(pre), std::move(per)));
  if (check == Check::checked && eval_ep(exp) != x)
    throw InternalError("all-gamma string does not evaluate to the upper bound");
  const std::uint64_t n = exp.preperiod_length();
  const std::uint64_t m = exp.finite() ? 1 : exp.period_length();
  return CycleReport{n, m, std::move(exp)};
}

}  // namespace

CycleReport detect_cycle(const Rational& x, const QSystem& qsys, Check check) {
  const Bounds range = bounds(qsys);
  if (x < range.lower)
    throw DomainError("x = " + x.str() + " below the lower bound a' = " + range.lower.str());
  if (range.upper < x)
    throw DomainError("x = " + x.str() + " above the upper bound a'' = " + range.upper.str());
  if (x == range.upper) return gamma_string_report(x, qsys, check);

  const Integer& r = x.den();
  const Integer step_bound =
      (2 * r + 1) * Integer(qsys.period_length()) + Integer(qsys.preperiod_length());

  Digits digits;
  EncoderState state{x.num(), tail_sum(qsys, 0, Selector::negative_signs), 0};
  std::map<std::pair<Integer, std::size_t>, std::uint64_t> seen;
  seen.emplace(std::make_pair(state.u, qsys.phase(1)), 0);

  // Checked-mode running state: the prefix value and partial product grow
  // incrementally, and s is verified against its closed form once per phase
  // (s is a pure function of the phase) and against the cache afterwards.
  Rational head;
  Integer prefix_prod = 1;
  std::vector<std::optional<Rational>> s_by_phase(
      check == Check::checked ? qsys.preperiod_length() + qsys.period_length() : 0);

  for (std::uint64_t k = 1;; ++k) {
    if (mpz_cmp_ui(step_bound.get_mpz_t(), k) < 0)
      throw InternalError("cycle detection exceeded the pigeonhole step bound " +
                          step_bound.get_str());
    const QTerm t = qsys.term(k);
    const Integer delta = Integer(t.base) * state.u;
    // The remaining value lands exactly on a digit: the expansion terminates
    // here with the all-zero continuation.
    if (mpz_divisible_p(delta.get_mpz_t(), r.get_mpz_t())) {
      const Integer g = Integer(t.sign) * (delta / r);
      if (g >= 0 && g <= t.base - 1) {
        digits.push_back(static_cast<Digit>(g.get_si()));
        while (!digits.empty() && digits.back() == 0) digits.pop_back();
        if (check == Check::checked && eval_finite(qsys, digits) != x)
          throw InternalError("finite digit string does not evaluate back to x");
        const std::uint64_t n = digits.size();
        return CycleReport{n, 1, Expansion(qsys, std::move(digits), {})};
      }
    }
    auto [eps, next] = extract_digit(state, t, r);
    digits.push_back(eps);
    state = std::move(next);
    if (check == Check::checked) {
      prefix_prod *= t.base;
      head += Rational(Integer(t.sign) * Integer(eps), prefix_prod);
      if (x != head + Rational(state.u, r) / Rational(prefix_prod))
        throw InternalError("shift identity failed at step " + std::to_string(k));
      std::optional<Rational>& cached = s_by_phase[qsys.phase(k)];
      if (!cached)
        cached = Rational(prefix_prod) * tail_sum(qsys, k, Selector::negative_signs);
      if (state.s != *cached)
        throw InternalError("sign-correction sum diverged from its closed form at step " +
                            std::to_string(k));
    }
    const auto key = std::make_pair(state.u, qsys.phase(k + 1));
    const auto it = seen.find(key);
    if (it != seen.end()) {
      const std::uint64_t n = it->second;
      const std::uint64_t m = k - n;
      Digits pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(n));
      Digits per(digits.begin() + static_cast<std::ptrdiff_t>(n), digits.end());
      Expansion exp(qsys, std::move(pre), std::move(per));
      if (check == Check::checked && eval_ep(exp) != x)
        throw InternalError("periodic digit string does not evaluate back to x");
      return CycleReport{n, m, std::move(exp)};
    }
    seen.emplace(key, k);
  }
}

bool rationality_equation_check(const Rational& x, const Expansion& exp,
                                std::optional<std::uint64_t> n, std::optional<std::uint64_t> m) {
  const std::uint64_t off = n.value_or(exp.preperiod_length());
  const std::uint64_t gap = m.value_or(exp.finite() ? 1 : exp.period_length());
  if (gap == 0) throw std::invalid_argument("period gap m must be positive");
  const QSystem& qsys = exp.qsys();
  const Rational tail_at_n = x - eval_finite(qsys, exp.unroll(off));
  const Rational tail_at_nm = x - eval_finite(qsys, exp.unroll(off + gap));
  Integer pi = 1;
  for (std::uint64_t j = off + 1; j <= off + gap; ++j) pi *= qsys.term(j).base;
  return tail_at_n == Rational(pi) * tail_at_nm;
}

}  // namespace cantor
