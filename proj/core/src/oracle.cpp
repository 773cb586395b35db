#include "cantor/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "cantor/encode.hpp"
#include "cantor/errors.hpp"
#include "cantor/shift.hpp"

namespace cantor {

namespace {

bool matches(const QTerm& t, bool negative) { return negative ? t.sign < 0 : t.sign > 0; }

// Tail over positions > m of (q-1)/(q_1...q_j) restricted to one sign,
// derived from scratch: direct summation to the period alignment point, then
// one geometric solve on a single relative block.
Rational oracle_tail(const QSystem& qsys, std::uint64_t m, bool negative) {
  const std::uint64_t start = std::max<std::uint64_t>(m, qsys.preperiod_length());
  Rational head;
  Integer prod = 1;
  for (std::uint64_t j = 1; j <= start; ++j) {
    const QTerm t = qsys.term(j);
    prod *= t.base;
    if (j > m && matches(t, negative)) head += Rational(Integer(t.base - 1), prod);
  }
  Rational block;
  Integer bprod = 1;
  for (std::uint64_t j = start + 1; j <= start + qsys.period_length(); ++j) {
    const QTerm t = qsys.term(j);
    bprod *= t.base;
    if (matches(t, negative)) block += Rational(Integer(t.base - 1), bprod);
  }
  if (block.is_zero()) return head;
  return head + block * Rational(bprod, bprod - 1) / Rational(prod);
}

void validate_terms(std::span<const QTerm> terms) {
  for (std::size_t j = 0; j < terms.size(); ++j)
    if (terms[j].base < 2 || (terms[j].sign != 1 && terms[j].sign != -1))
      throw std::invalid_argument("term at position " + std::to_string(j + 1) +
                                  " must have base >= 2 and sign +1 or -1");
}

// Exact sum of the matching listed terms at positions (from, D], absolute.
Rational list_tail(std::span<const QTerm> terms, std::size_t from, bool negative) {
  Rational acc;
  Integer prod = 1;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    prod *= terms[j].base;
    if (j + 1 > from && matches(terms[j], negative))
      acc += Rational(Integer(terms[j].base - 1), prod);
  }
  return acc;
}

// 1/(q_1...q_D): the exact total weight of everything beyond the list,
// whatever the unlisted bases and signs are.
Rational list_remainder(std::span<const QTerm> terms) {
  Integer prod = 1;
  for (const QTerm& t : terms) prod *= t.base;
  return Rational(Integer(1), prod);
}

}  // namespace

Digits encode_bruteforce(const Rational& x, const QSystem& qsys, std::uint64_t depth) {
  const Rational lower = -oracle_tail(qsys, 0, true);
  const Rational upper = oracle_tail(qsys, 0, false);
  if (x < lower || upper < x)
    throw DomainError("x = " + x.str() + " outside [" + lower.str() + ", " + upper.str() + "]");
  const bool at_sup = x == upper;

  Digits out;
  out.reserve(depth);
  Rational anchor;
  Integer prod = 1;
  for (std::uint64_t k = 1; k <= depth; ++k) {
    const QTerm t = qsys.term(k);
    prod *= t.base;
    const Rational tneg = oracle_tail(qsys, k, true);
    const Rational tpos = oracle_tail(qsys, k, false);
    std::optional<Digit> chosen;
    Rational chosen_anchor;
    // An exact anchor hit wins: x has the finite continuation [d, 0, 0, ...].
    for (Digit d = 0; d <= t.base - 1 && !chosen; ++d) {
      const Rational ca = anchor + Rational(Integer(t.sign) * Integer(d), prod);
      if (x == ca) {
        chosen = d;
        chosen_anchor = ca;
      }
    }
    // Otherwise the unique half-open sub-cylinder [inf, sup) containing x.
    for (Digit d = 0; !chosen && d <= t.base - 1; ++d) {
      const Rational ca = anchor + Rational(Integer(t.sign) * Integer(d), prod);
      if (ca - tneg <= x && x < ca + tpos) {
        chosen = d;
        chosen_anchor = ca;
      }
    }
    // The global supremum is the one point every half-open interval misses:
    // it lives in the sub-cylinder it is the supremum of.
    for (Digit d = 0; !chosen && at_sup && d <= t.base - 1; ++d) {
      const Rational ca = anchor + Rational(Integer(t.sign) * Integer(d), prod);
      if (x == ca + tpos) {
        chosen = d;
        chosen_anchor = ca;
      }
    }
    if (!chosen) throw InternalError("no sub-cylinder contains x at rank " + std::to_string(k));
    out.push_back(*chosen);
    anchor = chosen_anchor;
  }
  return out;
}

Digits encode_bruteforce(const Rational& x, std::span<const QTerm> terms, std::uint64_t depth) {
  validate_terms(terms);
  if (depth > terms.size())
    throw DomainError("depth " + std::to_string(depth) + " exceeds the supplied " +
                      std::to_string(terms.size()) + " terms");
  const Rational rem = list_remainder(terms);
  if (x < -list_tail(terms, 0, true) - rem || list_tail(terms, 0, false) + rem < x)
    throw DomainError("x = " + x.str() +
                      " is certainly outside the interval representable by the supplied terms");

  Digits out;
  out.reserve(depth);
  Rational anchor;
  Integer prod = 1;
  for (std::uint64_t k = 1; k <= depth; ++k) {
    const QTerm t = terms[k - 1];
    prod *= t.base;
    const Rational tneg = list_tail(terms, k, true);
    const Rational tpos = list_tail(terms, k, false);
    std::optional<Digit> chosen;
    Rational chosen_anchor;
    std::size_t possible = 0;
    for (Digit d = 0; d <= t.base - 1; ++d) {
      const Rational ca = anchor + Rational(Integer(t.sign) * Integer(d), prod);
      if (x == ca) {
        // Anchor hit: certain for any completion of the list.
        chosen = d;
        chosen_anchor = ca;
        possible = 1;
        break;
      }
      if (ca - tneg <= x && x < ca + tpos) {
        // Certain containment: the unknown tails only widen this interval.
        chosen = d;
        chosen_anchor = ca;
        possible = 1;
        break;
      }
      if (ca - tneg - rem <= x && x < ca + tpos + rem) {
        ++possible;
        chosen = d;
        chosen_anchor = ca;
      }
    }
    if (possible == 0)
      throw DomainError("the supplied terms place x outside every sub-cylinder at position " +
                        std::to_string(k));
    if (possible > 1)
      throw DomainError("the supplied terms cannot decide the digit at position " +
                        std::to_string(k) + "; extend the list");
    out.push_back(*chosen);
    anchor = chosen_anchor;
  }
  return out;
}

std::pair<Rational, Rational> partial_sum_bracket(const Expansion& exp, std::uint64_t n) {
  const QSystem& qsys = exp.qsys();
  Rational anchor;
  Integer prod = 1;
  for (std::uint64_t j = 1; j <= n; ++j) {
    const QTerm t = qsys.term(j);
    prod *= t.base;
    anchor += Rational(Integer(t.sign) * Integer(exp.digit(j)), prod);
  }
  return {anchor - oracle_tail(qsys, n, true), anchor + oracle_tail(qsys, n, false)};
}

std::pair<Rational, Rational> cylinder_bracket(std::span<const QTerm> terms, const Digits& digits) {
  validate_terms(terms);
  if (digits.size() > terms.size())
    throw DomainError("digit prefix of length " + std::to_string(digits.size()) +
                      " exceeds the supplied " + std::to_string(terms.size()) + " terms");
  Rational anchor;
  Integer prod = 1;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const QTerm t = terms[j];
    if (digits[j] < 0 || digits[j] > t.base - 1)
      throw AdmissibilityError("digit " + std::to_string(digits[j]) + " at position " +
                               std::to_string(j + 1) + " outside [0, " +
                               std::to_string(t.base - 1) + "]");
    prod *= t.base;
    anchor += Rational(Integer(t.sign) * Integer(digits[j]), prod);
  }
  const Rational rem = list_remainder(terms);
  return {anchor - list_tail(terms, digits.size(), true) - rem,
          anchor + list_tail(terms, digits.size(), false) + rem};
}

bool check_roundtrip(const Rational& x, const QSystem& qsys, std::uint64_t depth) {
  const Expansion enc = encode(x, qsys);
  if (eval_ep(enc) != x) return false;
  if (enc.unroll(depth) != encode_bruteforce(x, qsys, depth)) return false;
  for (std::uint64_t n = 0; n <= depth; ++n)
    if (!shift_identity_check(x, enc, n)) return false;
  return true;
}

}  // namespace cantor
