#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cantor/qsystem.hpp"

namespace cantor {

using Digit = std::int64_t;
using Digits = std::vector<Digit>;

// True iff 0 <= digits[k-1] <= q_k - 1 for every position k.
bool is_admissible(const QSystem& qsys, const Digits& digits);

// Digit of the infimum-tail pattern at a position carrying `term`:
// q - 1 on negative-sign positions, 0 on positive ones. A string that is
// this pattern everywhere evaluates to the lower bound a'.
Digit beta_digit(const QTerm& term);

// Digit of the supremum-tail pattern: the mirror of beta_digit. The all-gamma
// string evaluates to the upper bound a''.
Digit gamma_digit(const QTerm& term);

// Eventually periodic digit string over a QSystem:
// digit(k) = pre[k-1] for k <= n, else per[(k-n-1) mod m]; an empty period
// means the expansion is finite (all zeros past the preperiod).
// Validated on construction: every digit admissible, and for m >= 1 the
// schedule repeats in step with the digits (term(n+j) == term(n+j+m) for all
// j >= 1), so the periodic digit block always meets the same bases and signs.
class Expansion {
 public:
  Expansion(QSystem qsys, Digits pre, Digits per);

  const QSystem& qsys() const { return qsys_; }
  const Digits& pre() const { return pre_; }
  const Digits& per() const { return per_; }
  std::size_t preperiod_length() const { return pre_.size(); }
  std::size_t period_length() const { return per_.size(); }
  bool finite() const { return per_.empty(); }

  Digit digit(std::uint64_t k) const;

  // First `depth` digits.
  Digits unroll(std::size_t depth) const;

  friend bool operator==(const Expansion& a, const Expansion& b) {
    return a.qsys_ == b.qsys_ && a.pre_ == b.pre_ && a.per_ == b.per_;
  }
  friend bool operator!=(const Expansion& a, const Expansion& b) { return !(a == b); }

 private:
  QSystem qsys_;
  Digits pre_;
  Digits per_;
};

// Value of a finite digit string: sum of a_k d_k / (q_1...q_k).
Rational eval_finite(const QSystem& qsys, const Digits& digits);

// Exact value of an eventually periodic expansion. The periodic block is a
// geometric series: with B the block value rescaled to the period start and
// Pi the block product, the tail contributes B * Pi/(Pi - 1) / (q_1...q_n).
Rational eval_ep(const Expansion& exp);

// A rank-m cylinder: the set of numbers whose first m digits equal `base`.
class Cylinder {
 public:
  Cylinder(QSystem qsys, Digits base);

  const QSystem& qsys() const { return qsys_; }
  const Digits& base() const { return base_; }
  std::size_t rank() const { return base_.size(); }

 private:
  QSystem qsys_;
  Digits base_;
};

// Closed interval [inf, sup] of a cylinder:
// inf = eval(base) - negative tail, sup = eval(base) + positive tail.
// Width is exactly 1 / partial_product(rank).
std::pair<Rational, Rational> cylinder_interval(const Cylinder& cyl);

// If the expansion's tail is eventually the beta or gamma pattern past some
// branch position k >= 1 whose digit can be moved one step against the sign,
// returns the two representations of the same number: first the beta-side
// (digits beta from k+1 on), then the gamma-side (digits gamma from k+1 on).
// Their digits agree below k and differ by one at k. Returns nullopt for
// uniquely represented numbers, including the all-beta and all-gamma strings
// (the interval endpoints).
std::optional<std::pair<Expansion, Expansion>> dual_representations(const Expansion& exp);

// Equivalent expansion with minimal preperiod and minimal period (preperiod
// digits absorbed into rotations of the period where possible), an all-zero
// period collapsed to a finite expansion, and, when the number has two
// representations, the encoder's representative: the finite twin when one
// exists, otherwise the beta-side.
Expansion canonicalize(const Expansion& exp);

}  // namespace cantor
