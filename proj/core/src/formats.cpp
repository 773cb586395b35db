#include "cantor/formats.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t pos = s.find(sep);
    if (pos == std::string_view::npos) {
      out.push_back(s);
      return out;
    }
    out.push_back(s.substr(0, pos));
    s.remove_prefix(pos + 1);
  }
}

QTerm parse_qterm(std::string_view item) {
  item = trim(item);
  if (item.size() < 2)
    throw ParseError("schedule term '" + std::string(item) + "' too short; expected e.g. 2+");
  int sign = 0;
  if (item.back() == '+')
    sign = 1;
  else if (item.back() == '-')
    sign = -1;
  else
    throw ParseError("schedule term '" + std::string(item) + "' must end in + or -");
  const std::string_view num = item.substr(0, item.size() - 1);
  std::int64_t base = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), base);
  if (ec != std::errc() || ptr != num.data() + num.size())
    throw ParseError("bad base '" + std::string(num) + "' in schedule term");
  return QTerm{base, sign};
}

std::vector<QTerm> parse_qterm_list(std::string_view list) {
  std::vector<QTerm> out;
  list = trim(list);
  if (list.empty()) return out;
  for (std::string_view item : split(list, ',')) out.push_back(parse_qterm(item));
  return out;
}

Digit parse_digit_token(std::string_view item) {
  item = trim(item);
  Digit d = 0;
  const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
  if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
    throw ParseError("bad digit '" + std::string(item) + "'");
  return d;
}

Digits parse_digit_list(std::string_view list) {
  Digits out;
  list = trim(list);
  if (list.empty()) return out;
  for (std::string_view item : split(list, ',')) out.push_back(parse_digit_token(item));
  return out;
}

void append_terms(std::string& out, const std::vector<QTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms[i].base);
    out += terms[i].sign < 0 ? '-' : '+';
  }
}

void append_digits(std::string& out, const Digits& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
}

}  // namespace

QSystem parse_qsystem(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t semi = s.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("system spec must look like pre:...;per:...");
  std::string_view pre_part = trim(s.substr(0, semi));
  std::string_view per_part = trim(s.substr(semi + 1));
  if (pre_part.substr(0, 4) != "pre:")
    throw ParseError("system spec must start with pre:");
  if (per_part.substr(0, 4) != "per:")
    throw ParseError("system spec must contain per: after the semicolon");
  pre_part.remove_prefix(4);
  per_part.remove_prefix(4);
  try {
    return QSystem(parse_qterm_list(pre_part), parse_qterm_list(per_part));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string render_qsystem(const QSystem& qsys) {
  std::string out = "pre:";
  append_terms(out, qsys.preperiod());
  out += ";per:";
  append_terms(out, qsys.period());
  return out;
}

std::pair<Digits, Digits> parse_digit_stream(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t open = s.find('(');
  if (open == std::string_view::npos) {
    if (s.find(')') != std::string_view::npos)
      throw ParseError("unmatched ')' in digit stream");
    return {parse_digit_list(s), {}};
  }
  if (s.back() != ')' || s.find(')') != s.size() - 1 || s.find('(', open + 1) != std::string_view::npos)
    throw ParseError("digit stream period must be one trailing (...) group");
  const Digits pre = parse_digit_list(s.substr(0, open));
  const Digits per = parse_digit_list(s.substr(open + 1, s.size() - open - 2));
  if (per.empty()) throw ParseError("period group must contain at least one digit");
  return {pre, per};
}

std::string render_digit_stream(const Expansion& exp) {
  std::string out;
  append_digits(out, exp.pre());
  if (!exp.finite()) {
    out += '(';
    append_digits(out, exp.per());
    out += ')';
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto parse_int = [](std::string_view part, const char* what) -> Integer {
    part = trim(part);
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    bool ok = i < part.size();
    for (std::size_t j = i; ok && j < part.size(); ++j)
      ok = std::isdigit(static_cast<unsigned char>(part[j])) != 0;
    if (!ok)
      throw ParseError(std::string("bad ") + what + " '" + std::string(part) + "'");
    if (part.front() == '+') part.remove_prefix(1);
    return Integer(std::string(part));
  };
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");
  const std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, "integer literal"));
  const Integer num = parse_int(s.substr(0, slash), "numerator");
  const Integer den = parse_int(s.substr(slash + 1), "denominator");
  if (den == 0) throw ParseError("zero denominator in rational literal");
  return Rational(num, den);
}

}  // namespace cantor
