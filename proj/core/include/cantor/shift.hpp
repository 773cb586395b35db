#pragma once

#include <cstdint>
#include <optional>

#include "cantor/expansion.hpp"

namespace cantor {

// Invariant level for the encoding drivers: fast keeps the cheap always-on
// guards only; checked re-verifies the step identities and the final
// round-trip with exact arithmetic.
enum class Check { fast, checked };

// Numerator state of the shift recursion on x = p/r: u = r * sigma^k(x),
// with |u| <= r along any extractor-produced digit stream. u_0 = p.
struct ShiftState {
  Integer u;
  std::uint64_t k = 0;
};

// One step of the numerator recursion: u' = q*u - sign*digit*r.
// Throws AdmissibilityError on an out-of-range digit and DomainError when
// |u'| > r (the digit is not the extractor's digit for this state).
ShiftState sigma_step(const ShiftState& state, const QTerm& qterm, Digit digit, const Integer& r);

// sigma^n(x) = u_n / r, iterating sigma_step over exp's digits from u_0 = p.
Rational sigma_n(const Rational& x, const Expansion& exp, std::uint64_t n);

// Exact check of x == eval_finite(first n digits) + sigma^n(x)/(q_1...q_n).
bool shift_identity_check(const Rational& x, const Expansion& exp, std::uint64_t n);

// Cycle found by detect_cycle: sigma^n(x) == sigma^(n+m)(x) exactly, and
// `expansion` (preperiod n, period m) evaluates to x. A finite expansion is
// reported with n = its length and m = 1, since the shift is 0 from n on.
struct CycleReport {
  std::uint64_t n = 0;
  std::uint64_t m = 1;
  Expansion expansion;
};

// Runs the digit extractor, keying each step by (u, schedule phase), and
// stops at the first repeated key; the pigeonhole bound (2r+1)*P + L caps
// the step count. A remaining value landing exactly on a digit terminates
// the expansion immediately (all-zero continuation). x equal to the upper
// bound, the one point the half-open digit convention cannot reach, returns
// the all-gamma representation. Throws DomainError outside [a', a''].
CycleReport detect_cycle(const Rational& x, const QSystem& qsys, Check check = Check::fast);

// Exact self-similarity test behind the cycle report: with T(j) = x -
// eval_finite(exp's first j digits), checks T(n) == q_{n+1}...q_{n+m} * T(n+m).
// Offsets default to exp's own split (m = 1 for a finite exp). False when
// exp's digits do not represent x with the claimed split.
bool rationality_equation_check(const Rational& x, const Expansion& exp,
                                std::optional<std::uint64_t> n = std::nullopt,
                                std::optional<std::uint64_t> m = std::nullopt);

}  // namespace cantor
