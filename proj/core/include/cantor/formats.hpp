#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "cantor/expansion.hpp"

namespace cantor {

// Base schedule as "pre:<q><s>,...;per:<q><s>,..." with <s> one of +/-,
// e.g. "pre:;per:2+,3-". Throws ParseError on malformed input.
QSystem parse_qsystem(std::string_view text);
std::string render_qsystem(const QSystem& qsys);

// Digit stream as "d1,...,dn(p1,...,pm)"; finite expansions omit the
// parentheses. Returns the raw (pre, per) split without admissibility
// checks; construct an Expansion against a QSystem to validate.
std::pair<Digits, Digits> parse_digit_stream(std::string_view text);
std::string render_digit_stream(const Expansion& exp);

// "p/r" or a bare integer, optional leading minus.
Rational parse_rational(std::string_view text);

}  // namespace cantor
