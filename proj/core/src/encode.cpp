#include "cantor/encode.hpp"

#include <string>
#include <utility>

#include "cantor/errors.hpp"

namespace cantor {

Rational s_init(const QSystem& qsys) {
  return Rational(Integer(qsys.term(1).base)) * tail_sum(qsys, 1, Selector::negative_signs);
}

Rational s_step(const Rational& s_prev, const QTerm& qterm) {
  Rational s = Rational(Integer(qterm.base)) * s_prev;
  if (qterm.sign < 0) s -= Rational(Integer(qterm.base - 1));
  if (s < Rational(0) || Rational(1) < s)
    throw DomainError("sign-correction sum " + s.str() + " left [0, 1]");
  return s;
}

std::pair<Digit, EncoderState> extract_digit(const EncoderState& state, const QTerm& qterm,
                                             const Integer& r) {
  const Integer delta = Integer(qterm.base) * state.u;
  const Rational s = s_step(state.s, qterm);
  const Integer floored = (Rational(delta, r) + s).floor();
  const Integer mag = abs(floored);
  if (mag > qterm.base - 1)
    throw DomainError("extracted digit " + mag.get_str() + " at step " +
                      std::to_string(state.k + 1) + " exceeds " + std::to_string(qterm.base - 1) +
                      ": value outside the representable interval or corrupted state");
  const Digit eps = static_cast<Digit>(mag.get_si());
  Integer u = delta - Integer(qterm.sign) * mag * r;
  if (abs(u) > r)
    throw DomainError("residue |" + u.get_str() + "| exceeds the denominator " + r.get_str() +
                      " after step " + std::to_string(state.k + 1));
  return {eps, EncoderState{std::move(u), s, state.k + 1}};
}

Expansion encode(const Rational& x, const QSystem& qsys, Check check) {
  CycleReport report = detect_cycle(x, qsys, check);
  Expansion canon = canonicalize(report.expansion);
  if (check == Check::checked && eval_ep(canon) != x)
    throw InternalError("canonical expansion failed the exact round-trip");
  return canon;
}

std::optional<std::uint64_t> finite_criterion(const Rational& x, const QSystem& qsys) {
  Integer res = x.den();
  if (res == 1) return 0;
  const std::uint64_t preperiod = qsys.preperiod_length();
  const std::uint64_t period = qsys.period_length();
  std::uint64_t idle = 0;
  for (std::uint64_t k = 1;; ++k) {
    const Integer base(qsys.term(k).base);
    Integer g;
    mpz_gcd(g.get_mpz_t(), res.get_mpz_t(), base.get_mpz_t());
    if (g == 1) {
      // A full period of coprime bases past the preperiod: the residue can
      // never shrink again.
      if (k > preperiod && ++idle >= period) return std::nullopt;
      continue;
    }
    mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), g.get_mpz_t());
    idle = 0;
    if (res == 1) return k;
  }
}

PositiveDigitStream::PositiveDigitStream(const Rational& x, QSystem qsys)
    : qsys_(std::move(qsys)), r_(x.den()), u_(x.num()) {
  if (!qsys_.all_positive())
    throw DomainError("the positive-series recursion requires an all-positive sign schedule");
  if (x <= Rational(0) || Rational(1) <= x)
    throw DomainError("x = " + x.str() + " outside (0, 1)");
}

Digit PositiveDigitStream::next() {
  const QTerm t = qsys_.term(k_ + 1);
  const Integer delta = Integer(t.base) * u_;
  Integer eps;
  mpz_fdiv_q(eps.get_mpz_t(), delta.get_mpz_t(), r_.get_mpz_t());
  if (eps < 0 || eps > t.base - 1)
    throw InternalError("positive-series digit out of range at step " + std::to_string(k_ + 1));
  u_ = delta - eps * r_;
  ++k_;
  return static_cast<Digit>(eps.get_si());
}

Digits PositiveDigitStream::take(std::size_t count) {
  Digits out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

}  // namespace cantor
