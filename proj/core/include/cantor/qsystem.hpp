#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

// One term of a base schedule: a base q >= 2 and the sign (+1 or -1) its
// digit contributes with.
struct QTerm {
  std::int64_t base;
  int sign;

  friend bool operator==(const QTerm& a, const QTerm& b) {
    return a.base == b.base && a.sign == b.sign;
  }
  friend bool operator!=(const QTerm& a, const QTerm& b) { return !(a == b); }
};

// Eventually periodic base/sign schedule (q_k, a_k), k >= 1:
// term(k) = preperiod[k-1] for k <= L, else period[(k-L-1) mod P].
class QSystem {
 public:
  QSystem(std::vector<QTerm> preperiod, std::vector<QTerm> period);

  const std::vector<QTerm>& preperiod() const { return pre_; }
  const std::vector<QTerm>& period() const { return per_; }
  std::size_t preperiod_length() const { return pre_.size(); }
  std::size_t period_length() const { return per_.size(); }

  QTerm term(std::uint64_t k) const;

  // Schedule phase of position k, a value in [0, L+P): positions inside the
  // preperiod each get a distinct phase; past it the phase is the period slot.
  // term(j) = term(k) whenever phase(j) == phase(k).
  std::size_t phase(std::uint64_t k) const;

  // q_1 * ... * q_n; the empty product (n = 0) is 1.
  Integer partial_product(std::uint64_t n) const;

  bool all_positive() const;

  friend bool operator==(const QSystem& a, const QSystem& b) {
    return a.pre_ == b.pre_ && a.per_ == b.per_;
  }
  friend bool operator!=(const QSystem& a, const QSystem& b) { return !(a == b); }

 private:
  std::vector<QTerm> pre_;
  std::vector<QTerm> per_;
};

enum class Selector { negative_signs, positive_signs, all };

// Sum over k > m of (q_k - 1)/(q_1...q_k) restricted to terms matching the
// selector. Exact: the periodic part is a geometric series solved in closed
// form. tail_sum(q, m, all) == 1 / partial_product(q, m).
Rational tail_sum(const QSystem& qsys, std::uint64_t m, Selector sel);

struct Bounds {
  Rational lower;  // a' = -sum over negative-sign k of (q_k - 1)/(q_1...q_k)
  Rational upper;  // a'' = 1 + a'
};

// The representable interval [a', a'']; its width is exactly 1.
Bounds bounds(const QSystem& qsys);

}  // namespace cantor
