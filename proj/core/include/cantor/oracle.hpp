#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "cantor/expansion.hpp"

namespace cantor {

// Cylinder-search encoder, the ground-truth path: at each rank it enumerates
// every admissible digit, derives each sub-cylinder's exact interval from
// scratch, and picks the one containing x under the half-open convention
// (closed only at the global supremum). A value equal to a sub-cylinder
// anchor terminates with that digit (all-zero continuation). Shares no tail
// machinery with the closed-form encoder it verifies.
Digits encode_bruteforce(const Rational& x, const QSystem& qsys, std::uint64_t depth);

// The same search over an explicit finite term list (no periodic structure
// assumed). Tail sums beyond the list are only known to within one part in
// q_1...q_D, so a digit is emitted only when the brackets decide containment;
// throws DomainError when the supplied terms cannot decide a digit.
Digits encode_bruteforce(const Rational& x, std::span<const QTerm> terms, std::uint64_t depth);

// Rank-n cylinder interval of exp's digit prefix, endpoints re-derived from
// scratch. Brackets eval_ep(exp); width is exactly 1/(q_1...q_n).
std::pair<Rational, Rational> partial_sum_bracket(const Expansion& exp, std::uint64_t n);

// Certain outer bracket [lo, hi] for the value of a digit prefix over a
// finite term list: contains every possible completion of the list.
std::pair<Rational, Rational> cylinder_bracket(std::span<const QTerm> terms, const Digits& digits);

// True iff encode's first `depth` digits equal encode_bruteforce's, AND
// eval_ep(encode(x)) == x, AND the shift identity holds at every step up to
// `depth`.
bool check_roundtrip(const Rational& x, const QSystem& qsys, std::uint64_t depth);

}  // namespace cantor
