#include <doctest.h>

#include <random>
#include <span>
#include <vector>

#include "cantor/encode.hpp"
#include "cantor/errors.hpp"
#include "cantor/oracle.hpp"
#include "corpus.hpp"

using namespace cantor;
using corpus::rat;

namespace {
const QSystem plus_minus({}, {QTerm{2, 1}, QTerm{3, -1}});
const QSystem alternating({}, {QTerm{2, -1}, QTerm{2, 1}});
const QSystem decimal({}, {QTerm{10, 1}});
}  // namespace

TEST_CASE("cylinder search reproduces the pinned digit strings") {
  CHECK(encode_bruteforce(rat(1, 6), plus_minus, 8) == Digits{1, 2, 0, 0, 0, 0, 0, 0});
  CHECK(encode_bruteforce(rat(-2, 3), alternating, 8) == Digits{1, 0, 1, 0, 1, 0, 1, 0});
  CHECK(encode_bruteforce(rat(3, 5), plus_minus, 6) == Digits{1, 0, 1, 0, 1, 0});
  CHECK(encode_bruteforce(rat(-2, 5), plus_minus, 6) == Digits{0, 2, 0, 2, 0, 2});
  CHECK(encode_bruteforce(Rational(0), plus_minus, 4) == Digits{0, 0, 0, 0});
}

TEST_CASE("cylinder search rejects out-of-range values") {
  CHECK_THROWS_AS(encode_bruteforce(rat(7, 3), plus_minus, 4), DomainError);
}

TEST_CASE("explicit term lists work within their certainty margin") {
  const std::vector<QTerm> terms = {QTerm{2, 1}, QTerm{3, -1}, QTerm{2, 1}, QTerm{3, -1},
                                    QTerm{2, 1}, QTerm{3, -1}, QTerm{2, 1}, QTerm{3, -1}};
  CHECK(encode_bruteforce(rat(1, 6), std::span<const QTerm>(terms), 4) == Digits{1, 2, 0, 0});

  // One supplied term cannot separate the two rank-1 cylinders around 1/6.
  const std::vector<QTerm> short_list = {QTerm{2, 1}};
  CHECK_THROWS_AS(encode_bruteforce(rat(1, 6), std::span<const QTerm>(short_list), 1),
                  DomainError);
}

TEST_CASE("partial-sum brackets pin the decimal example") {
  const Expansion third(decimal, {}, {3});
  const auto [lo, hi] = partial_sum_bracket(third, 2);
  CHECK(lo == rat(33, 100));
  CHECK(hi == rat(34, 100));
}

TEST_CASE("partial-sum brackets nest onto the value") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const QSystem qsys = corpus::random_system(rng);
    const Rational x = corpus::random_in_range(rng, qsys);
    const Expansion exp = encode(x, qsys);
    Rational prev_lo = bounds(qsys).lower;
    Rational prev_hi = bounds(qsys).upper;
    for (std::uint64_t n = 0; n <= 8; ++n) {
      const auto [lo, hi] = partial_sum_bracket(exp, n);
      CHECK(lo <= x);
      CHECK(x <= hi);
      CHECK(prev_lo <= lo);
      CHECK(hi <= prev_hi);
      CHECK(hi - lo == Rational(Integer(1), qsys.partial_product(n)));
      prev_lo = lo;
      prev_hi = hi;
    }
  }
}

TEST_CASE("independent brackets agree with the closed-form cylinder intervals") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    const QSystem qsys = corpus::random_system(rng);
    const Rational x = corpus::random_in_range(rng, qsys);
    const Expansion exp = encode(x, qsys);
    const Digits prefix = exp.unroll(6);
    const auto [lo, hi] = partial_sum_bracket(exp, 6);
    const auto [clo, chi] = cylinder_interval(Cylinder(qsys, prefix));
    CHECK(lo == clo);
    CHECK(hi == chi);
  }
}

TEST_CASE("term-list brackets contain the value with the truncation margin") {
  const std::vector<QTerm> terms = {QTerm{2, -1}, QTerm{2, 1}, QTerm{2, -1}, QTerm{2, 1}};
  const auto [lo, hi] = cylinder_bracket(std::span<const QTerm>(terms), {1, 0});
  CHECK(lo <= rat(-2, 3));
  CHECK(rat(-2, 3) <= hi);
  CHECK(hi - lo <= rat(1, 4) + rat(1, 4) + rat(1, 4));
  CHECK_THROWS_AS(cylinder_bracket(std::span<const QTerm>(terms), {2, 0}),
                  AdmissibilityError);
}

TEST_CASE("round-trip checker accepts the pinned cases") {
  CHECK(check_roundtrip(rat(1, 6), plus_minus, 10));
  CHECK(check_roundtrip(Rational(0), plus_minus, 5));
  CHECK(check_roundtrip(rat(-2, 3), alternating, 10));
}

TEST_CASE("oracle and extractor agree digit by digit on a random corpus") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const QSystem qsys = corpus::random_system(rng);
    const Rational x = corpus::random_in_range(rng, qsys);
    CHECK(encode(x, qsys).unroll(25) == encode_bruteforce(x, qsys, 25));
  }
}
