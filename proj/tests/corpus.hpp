#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cantor/qsystem.hpp"
#include "cantor/rational.hpp"

namespace corpus {

// Random eventually periodic system inside the acceptance envelope:
// period length <= 6, bases <= 20, preperiod length <= 4, random signs.
inline cantor::QSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> period_len(1, 6);
  std::uniform_int_distribution<int> preperiod_len(0, 4);
  std::uniform_int_distribution<std::int64_t> base(2, 20);
  std::uniform_int_distribution<int> coin(0, 1);
  auto block = [&](int n) {
    std::vector<cantor::QTerm> terms;
    for (int i = 0; i < n; ++i) terms.push_back(cantor::QTerm{base(rng), coin(rng) == 0 ? 1 : -1});
    return terms;
  };
  return cantor::QSystem(block(preperiod_len(rng)), block(period_len(rng)));
}

// Uniform p/r in the representable interval; the interval has width exactly
// one, so every denominator admits at least one numerator.
inline cantor::Rational random_in_range(std::mt19937_64& rng, const cantor::QSystem& qsys,
                                        long rmax = 500) {
  const cantor::Bounds range = cantor::bounds(qsys);
  std::uniform_int_distribution<long> denom(1, rmax);
  const cantor::Integer r(denom(rng));
  cantor::Integer lo, hi;
  mpz_cdiv_q(lo.get_mpz_t(), cantor::Integer(range.lower.num() * r).get_mpz_t(),
             range.lower.den().get_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), cantor::Integer(range.upper.num() * r).get_mpz_t(),
             range.upper.den().get_mpz_t());
  std::uniform_int_distribution<long> numer(lo.get_si(), hi.get_si());
  return cantor::Rational(cantor::Integer(numer(rng)), r);
}

inline cantor::Rational rat(long p, long r) { return {cantor::Integer(p), cantor::Integer(r)}; }

}  // namespace corpus
