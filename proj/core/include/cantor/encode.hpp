#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "cantor/expansion.hpp"
#include "cantor/shift.hpp"

namespace cantor {

// Digit extractor state after k steps on x = p/r: u is the residue numerator
// (u = r * sigma^k(x), so q_{k+1} * u is the next step's Delta), s the
// sign-correction sum s_k, always in [0, 1]. Start state for encoding x:
// {p, tail_sum(qsys, 0, negative_signs), 0}.
struct EncoderState {
  Integer u;
  Rational s;
  std::uint64_t k = 0;
};

// s_1 = q_1 * (sum over k > 1 with negative sign of (q_k-1)/(q_2...q_k)).
Rational s_init(const QSystem& qsys);

// s_k from s_{k-1}: q*s - (q-1) on negative-sign terms, q*s otherwise.
// Throws DomainError when the result leaves [0, 1].
Rational s_step(const Rational& s_prev, const QTerm& qterm);

// One extraction step: digit_k = |floor(q*u/r + s_k)| for qterm = term(k),
// k = state.k + 1; returns the digit and the advanced state. Throws
// DomainError when the digit falls outside [0, q-1] or the new residue
// breaks |u| <= r (value outside the representable interval, or a state not
// produced by this recursion).
std::pair<Digit, EncoderState> extract_digit(const EncoderState& state, const QTerm& qterm,
                                             const Integer& r);

// Canonical expansion of x: cycle detection plus canonical reduction.
// Evaluates back to x exactly; finite exactly when the remaining value hits
// a digit anchor, which for x interior to [a', a''] is exactly when
// finite_criterion admits it. Throws DomainError outside [a', a''].
Expansion encode(const Rational& x, const QSystem& qsys, Check check = Check::fast);

// Least n0 with r | q_1...q_n0 for x = p/r in lowest terms, if any. Uses the
// shrinking-residue iteration r_n = r_{n-1}/gcd(r_{n-1}, q_n), giving up
// once a full period passes without shrinking.
std::optional<std::uint64_t> finite_criterion(const Rational& x, const QSystem& qsys);

// Digit stream of the plain positive-series recursion: Delta_1 = p*q_1,
// eps_n = floor(Delta_n/r), Delta_{n+1} = q_{n+1}(Delta_n - r*eps_n). A
// cross-validation path that never consults s. Requires an all-positive
// schedule and 0 < x < 1.
class PositiveDigitStream {
 public:
  PositiveDigitStream(const Rational& x, QSystem qsys);

  Digit next();
  Digits take(std::size_t count);

 private:
  QSystem qsys_;
  Integer r_;
  Integer u_;
  std::uint64_t k_ = 0;
};

}  // namespace cantor
