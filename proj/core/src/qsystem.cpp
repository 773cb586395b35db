#include "cantor/qsystem.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cantor {

QSystem::QSystem(std::vector<QTerm> preperiod, std::vector<QTerm> period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw std::invalid_argument("period must be non-empty");
  auto check = [](const QTerm& t) {
    if (t.base < 2) throw std::invalid_argument("base must be >= 2, got " + std::to_string(t.base));
    if (t.sign != 1 && t.sign != -1)
      throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(t.sign));
  };
  for (const QTerm& t : pre_) check(t);
  for (const QTerm& t : per_) check(t);
}

QTerm QSystem::term(std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("term index starts at 1");
  if (k <= pre_.size()) return pre_[k - 1];
  return per_[(k - pre_.size() - 1) % per_.size()];
}

std::size_t QSystem::phase(std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("term index starts at 1");
  if (k <= pre_.size()) return static_cast<std::size_t>(k - 1);
  return pre_.size() + static_cast<std::size_t>((k - pre_.size() - 1) % per_.size());
}

Integer QSystem::partial_product(std::uint64_t n) const {
  Integer p = 1;
  for (std::uint64_t k = 1; k <= n; ++k) p *= term(k).base;
  return p;
}

bool QSystem::all_positive() const {
  for (const QTerm& t : pre_)
    if (t.sign < 0) return false;
  for (const QTerm& t : per_)
    if (t.sign < 0) return false;
  return true;
}

namespace {

bool matches(Selector sel, const QTerm& t) {
  switch (sel) {
    case Selector::negative_signs: return t.sign < 0;
    case Selector::positive_signs: return t.sign > 0;
    case Selector::all: return true;
  }
  return false;
}

}  // namespace

Rational tail_sum(const QSystem& qsys, std::uint64_t m, Selector sel) {
  const std::uint64_t L = qsys.preperiod_length();
  const std::size_t P = qsys.period_length();
  const std::uint64_t t = std::max(m, L);

  // Direct terms between m and the start of a pure periodic tail.
  Rational acc;
  Integer prod = qsys.partial_product(m);
  for (std::uint64_t k = m + 1; k <= t; ++k) {
    const QTerm term = qsys.term(k);
    prod *= term.base;
    if (matches(sel, term)) acc += Rational(Integer(term.base - 1), prod);
  }

  // Periodic tail, rescaled to start right after t. One period block of
  // product B contributes the integer c = sum of (q-1) * trailing products,
  // and the full tail S satisfies S = (c + S)/B, i.e. S = c/(B - 1).
  Integer c = 0;
  Integer block = 1;
  for (std::size_t j = P; j >= 1; --j) {
    const QTerm term = qsys.term(t + j);
    if (matches(sel, term)) c += (Integer(term.base) - 1) * block;
    block *= term.base;
  }
  if (c != 0) acc += Rational(c, block - 1) / Rational(prod);
  return acc;
}

Bounds bounds(const QSystem& qsys) {
  Rational lower = -tail_sum(qsys, 0, Selector::negative_signs);
  return Bounds{lower, Rational(1) + lower};
}

}  // namespace cantor
