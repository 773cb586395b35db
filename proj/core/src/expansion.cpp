#include "cantor/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "cantor/errors.hpp"

namespace cantor {

bool is_admissible(const QSystem& qsys, const Digits& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const QTerm t = qsys.term(i + 1);
    if (digits[i] < 0 || digits[i] > t.base - 1) return false;
  }
  return true;
}

Digit beta_digit(const QTerm& term) { return term.sign < 0 ? term.base - 1 : 0; }

Digit gamma_digit(const QTerm& term) { return term.sign < 0 ? 0 : term.base - 1; }

namespace {

void require_admissible_at(const QSystem& qsys, std::uint64_t k, Digit d) {
  const QTerm t = qsys.term(k);
  if (d < 0 || d > t.base - 1)
    throw AdmissibilityError("digit " + std::to_string(d) + " at position " + std::to_string(k) +
                             " outside [0, " + std::to_string(t.base - 1) + "]");
}

// term(n+j) == term(n+j+m) for all j >= 1. Both sides are period-length
// periodic in j once n+j clears the schedule preperiod, so one window decides.
bool schedule_repeats(const QSystem& qsys, std::uint64_t n, std::uint64_t m) {
  const std::uint64_t L = qsys.preperiod_length();
  const std::uint64_t window = (L > n ? L - n : 0) + qsys.period_length();
  for (std::uint64_t j = 1; j <= window; ++j)
    if (qsys.term(n + j) != qsys.term(n + j + m)) return false;
  return true;
}

enum class Pattern { beta, gamma };

Digit pattern_digit(Pattern p, const QTerm& t) {
  return p == Pattern::beta ? beta_digit(t) : gamma_digit(t);
}

// Minimal preperiod, minimal period, all-zero period collapsed to finite,
// trailing zeros of a finite expansion stripped. Twin selection is not
// applied here.
Expansion normalize(const Expansion& exp) {
  const QSystem& qsys = exp.qsys();
  Digits pre = exp.pre();
  Digits per = exp.per();
  if (std::all_of(per.begin(), per.end(), [](Digit d) { return d == 0; })) {
    per.clear();
    while (!pre.empty() && pre.back() == 0) pre.pop_back();
    return Expansion(qsys, std::move(pre), std::move(per));
  }
  const std::size_t m = per.size();
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool tail_repeats = true;
    for (std::size_t j = 0; j < m && tail_repeats; ++j) tail_repeats = per[j] == per[(j + d) % m];
    if (!tail_repeats || !schedule_repeats(qsys, pre.size(), d)) continue;
    per.resize(d);
    break;
  }
  while (!pre.empty() && pre.back() == per.back() &&
         qsys.term(pre.size()) == qsys.term(pre.size() + per.size())) {
    pre.pop_back();
    std::rotate(per.begin(), per.end() - 1, per.end());
  }
  return Expansion(qsys, std::move(pre), std::move(per));
}

// Minimal position t >= 1 with digit(j) == pattern(j) for all j >= t, if any.
// Past max(preperiod lengths) both the digit stream and the pattern are
// periodic, so one lcm window decides the infinite comparison.
std::optional<std::uint64_t> tail_match_start(const Expansion& exp, Pattern p) {
  const QSystem& qsys = exp.qsys();
  const std::uint64_t h0 = std::max<std::uint64_t>(exp.preperiod_length(), qsys.preperiod_length());
  const std::uint64_t m = exp.period_length();
  const std::uint64_t window =
      m == 0 ? qsys.period_length() : std::lcm<std::uint64_t>(m, qsys.period_length());
  for (std::uint64_t j = h0 + 1; j <= h0 + window; ++j)
    if (exp.digit(j) != pattern_digit(p, qsys.term(j))) return std::nullopt;
  std::uint64_t t = h0 + 1;
  while (t > 1 && exp.digit(t - 1) == pattern_digit(p, qsys.term(t - 1))) --t;
  return t;
}

// Expansion taking the given first digits and the pattern from there on.
Expansion with_pattern_tail(const QSystem& qsys, Digits prefix, Pattern p) {
  const std::uint64_t k = prefix.size();
  const std::uint64_t h = std::max<std::uint64_t>(k, qsys.preperiod_length());
  Digits pre = std::move(prefix);
  for (std::uint64_t j = k + 1; j <= h; ++j) pre.push_back(pattern_digit(p, qsys.term(j)));
  Digits per;
  per.reserve(qsys.period_length());
  for (std::uint64_t j = h + 1; j <= h + qsys.period_length(); ++j)
    per.push_back(pattern_digit(p, qsys.term(j)));
  return normalize(Expansion(qsys, std::move(pre), std::move(per)));
}

}  // namespace

Expansion::Expansion(QSystem qsys, Digits pre, Digits per)
    : qsys_(std::move(qsys)), pre_(std::move(pre)), per_(std::move(per)) {
  for (std::size_t i = 0; i < pre_.size(); ++i) require_admissible_at(qsys_, i + 1, pre_[i]);
  if (!per_.empty()) {
    if (!schedule_repeats(qsys_, pre_.size(), per_.size()))
      throw AdmissibilityError("period of length " + std::to_string(per_.size()) +
                               " misaligned with the base schedule after position " +
                               std::to_string(pre_.size()));
    for (std::size_t i = 0; i < per_.size(); ++i)
      require_admissible_at(qsys_, pre_.size() + i + 1, per_[i]);
  }
}

Digit Expansion::digit(std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("digit index starts at 1");
  if (k <= pre_.size()) return pre_[k - 1];
  if (per_.empty()) return 0;
  return per_[(k - pre_.size() - 1) % per_.size()];
}

Digits Expansion::unroll(std::size_t depth) const {
  Digits out;
  out.reserve(depth);
  for (std::size_t k = 1; k <= depth; ++k) out.push_back(digit(k));
  return out;
}

Rational eval_finite(const QSystem& qsys, const Digits& digits) {
  Rational v;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const QTerm t = qsys.term(i + 1);
    require_admissible_at(qsys, i + 1, digits[i]);
    v = (Rational(Integer(t.sign) * Integer(digits[i])) + v) / Rational(Integer(t.base));
  }
  return v;
}

Rational eval_ep(const Expansion& exp) {
  const QSystem& qsys = exp.qsys();
  Rational value = eval_finite(qsys, exp.pre());
  if (exp.finite()) return value;
  const std::uint64_t n = exp.preperiod_length();
  Rational block;
  Integer pi = 1;
  for (std::size_t j = exp.period_length(); j >= 1; --j) {
    const QTerm t = qsys.term(n + j);
    block = (Rational(Integer(t.sign) * Integer(exp.per()[j - 1])) + block) / Rational(Integer(t.base));
    pi *= t.base;
  }
  const Rational tail = block * Rational(pi, pi - 1);
  return value + tail / Rational(qsys.partial_product(n));
}

Cylinder::Cylinder(QSystem qsys, Digits base) : qsys_(std::move(qsys)), base_(std::move(base)) {
  for (std::size_t i = 0; i < base_.size(); ++i) require_admissible_at(qsys_, i + 1, base_[i]);
}

std::pair<Rational, Rational> cylinder_interval(const Cylinder& cyl) {
  const Rational anchor = eval_finite(cyl.qsys(), cyl.base());
  const std::uint64_t m = cyl.rank();
  return {anchor - tail_sum(cyl.qsys(), m, Selector::negative_signs),
          anchor + tail_sum(cyl.qsys(), m, Selector::positive_signs)};
}

std::optional<std::pair<Expansion, Expansion>> dual_representations(const Expansion& exp) {
  const QSystem& qsys = exp.qsys();
  for (Pattern p : {Pattern::beta, Pattern::gamma}) {
    const auto t = tail_match_start(exp, p);
    if (!t || *t < 2) continue;
    const std::uint64_t k = *t - 1;
    const QTerm tk = qsys.term(k);
    const Digit here = exp.digit(k);
    // The twin moves the branch digit one step against the sign.
    const Digit other = p == Pattern::beta ? here - tk.sign : here + tk.sign;
    if (other < 0 || other > tk.base - 1) continue;
    Digits prefix;
    prefix.reserve(k);
    for (std::uint64_t j = 1; j < k; ++j) prefix.push_back(exp.digit(j));
    Digits beta_prefix = prefix;
    Digits gamma_prefix = std::move(prefix);
    beta_prefix.push_back(p == Pattern::beta ? here : other);
    gamma_prefix.push_back(p == Pattern::beta ? other : here);
    return std::make_pair(with_pattern_tail(qsys, std::move(beta_prefix), Pattern::beta),
                          with_pattern_tail(qsys, std::move(gamma_prefix), Pattern::gamma));
  }
  return std::nullopt;
}

Expansion canonicalize(const Expansion& exp) {
  Expansion norm = normalize(exp);
  if (auto twins = dual_representations(norm)) {
    if (twins->second.finite()) return twins->second;
    return twins->first;
  }
  return norm;
}

}  // namespace cantor
