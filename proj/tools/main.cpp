#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantor/encode.hpp"
#include "cantor/errors.hpp"
#include "cantor/expansion.hpp"
#include "cantor/formats.hpp"
#include "cantor/oracle.hpp"
#include "cantor/qsystem.hpp"
#include "cantor/rational.hpp"
#include "cantor/shift.hpp"

namespace {

using cantor::AdmissibilityError;
using cantor::Bounds;
using cantor::Check;
using cantor::Digit;
using cantor::Digits;
using cantor::DomainError;
using cantor::Expansion;
using cantor::Integer;
using cantor::InternalError;
using cantor::ParseError;
using cantor::QSystem;
using cantor::QTerm;
using cantor::Rational;

using json = nlohmann::ordered_json;

Check mode_from_env() {
  const char* v = std::getenv("CANTOR_SIGNS_CHECKED");
  return (v != nullptr && std::string_view(v) == "1") ? Check::checked : Check::fast;
}

// Flag values may be either the core text formats or JSON objects; a leading
// '{' selects JSON. Systems: {"pre":[[q,sign],...],"per":[[q,sign],...]},
// digit streams: {"pre":[...],"per":[...]}.
bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    return c == '{';
  }
  return false;
}

json parse_json_arg(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON argument: ") + e.what());
  }
}

std::vector<QTerm> terms_from_json(const json& arr, const char* which) {
  if (!arr.is_array()) throw ParseError(std::string(which) + " must be an array of [q, sign] pairs");
  std::vector<QTerm> out;
  for (const json& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError(std::string(which) + " entries must be [q, sign] integer pairs");
    out.push_back(QTerm{item[0].get<std::int64_t>(), item[1].get<int>()});
  }
  return out;
}

QSystem parse_system_arg(const std::string& text) {
  if (!looks_like_json(text)) return cantor::parse_qsystem(text);
  const json j = parse_json_arg(text);
  try {
    return QSystem(terms_from_json(j.value("pre", json::array()), "pre"),
                   terms_from_json(j.value("per", json::array()), "per"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Digits digits_from_json(const json& arr, const char* which) {
  if (!arr.is_array()) throw ParseError(std::string(which) + " must be an array of digits");
  Digits out;
  for (const json& item : arr) {
    if (!item.is_number_integer()) throw ParseError(std::string(which) + " digits must be integers");
    out.push_back(item.get<Digit>());
  }
  return out;
}

std::pair<Digits, Digits> parse_digits_arg(const std::string& text) {
  if (!looks_like_json(text)) return cantor::parse_digit_stream(text);
  const json j = parse_json_arg(text);
  return {digits_from_json(j.value("pre", json::array()), "pre"),
          digits_from_json(j.value("per", json::array()), "per")};
}

Digits parse_base_arg(const std::string& text) {
  auto [pre, per] = parse_digits_arg(text);
  if (!per.empty()) throw ParseError("a cylinder base is a plain digit list without a period group");
  return pre;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json expansion_json(const Expansion& exp) {
  json j;
  j["pre"] = exp.pre();
  j["per"] = exp.per();
  return j;
}

// Uniform rational p/r in [bounds.lower, bounds.upper] with r <= rmax. The
// bounds are exactly one apart, so every r admits at least one numerator.
Rational random_in_range(std::mt19937_64& rng, const QSystem& qsys, long rmax) {
  const Bounds range = cantor::bounds(qsys);
  std::uniform_int_distribution<long> denom(1, rmax);
  const Integer r(denom(rng));
  Integer lo, hi;
  mpz_cdiv_q(lo.get_mpz_t(), Integer(range.lower.num() * r).get_mpz_t(),
             range.lower.den().get_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), Integer(range.upper.num() * r).get_mpz_t(),
             range.upper.den().get_mpz_t());
  std::uniform_int_distribution<long> numer(lo.get_si(), hi.get_si());
  return Rational(Integer(numer(rng)), r);
}

QSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> period_len(1, 6);
  std::uniform_int_distribution<int> preperiod_len(0, 4);
  std::uniform_int_distribution<std::int64_t> base(2, 20);
  std::uniform_int_distribution<int> coin(0, 1);
  auto block = [&](int n) {
    std::vector<QTerm> terms;
    for (int i = 0; i < n; ++i) terms.push_back(QTerm{base(rng), coin(rng) == 0 ? 1 : -1});
    return terms;
  };
  return QSystem(block(preperiod_len(rng)), block(period_len(rng)));
}

int cmd_encode(const std::string& system, const std::string& x_text) {
  const QSystem qsys = parse_system_arg(system);
  const Rational x = cantor::parse_rational(x_text);
  const Expansion exp = cantor::encode(x, qsys, mode_from_env());
  json j = expansion_json(exp);
  j["n"] = exp.preperiod_length();
  j["m"] = exp.finite() ? 1 : exp.period_length();
  j["finite"] = exp.finite();
  j["value"] = x.str();
  emit(j);
  return 0;
}

int cmd_eval(const std::string& system, const std::string& digits_text) {
  const QSystem qsys = parse_system_arg(system);
  auto [pre, per] = parse_digits_arg(digits_text);
  const Expansion exp(qsys, std::move(pre), std::move(per));
  json j;
  j["value"] = eval_ep(exp).str();
  emit(j);
  return 0;
}

int cmd_classify(const std::string& system, const std::string& x_text) {
  const QSystem qsys = parse_system_arg(system);
  const Rational x = cantor::parse_rational(x_text);
  const Expansion exp = cantor::encode(x, qsys, mode_from_env());
  const std::optional<std::uint64_t> n0 = cantor::finite_criterion(x, qsys);
  json j;
  j["finite"] = exp.finite();
  if (n0)
    j["n0"] = *n0;
  else
    j["n0"] = nullptr;
  j["preperiod"] = exp.preperiod_length();
  j["period"] = exp.period_length();
  emit(j);
  return 0;
}

int cmd_bounds(const std::string& system) {
  const Bounds range = cantor::bounds(parse_system_arg(system));
  json j;
  j["lower"] = range.lower.str();
  j["upper"] = range.upper.str();
  emit(j);
  return 0;
}

int cmd_cylinder(const std::string& system, const std::string& base_text) {
  const QSystem qsys = parse_system_arg(system);
  const cantor::Cylinder cyl(qsys, parse_base_arg(base_text));
  const auto [lower, upper] = cylinder_interval(cyl);
  json j;
  j["lower"] = lower.str();
  j["upper"] = upper.str();
  emit(j);
  return 0;
}

int cmd_dual(const std::string& system, const std::string& digits_text) {
  const QSystem qsys = parse_system_arg(system);
  auto [pre, per] = parse_digits_arg(digits_text);
  const Expansion exp(qsys, std::move(pre), std::move(per));
  const auto twins = dual_representations(exp);
  json j;
  j["value"] = eval_ep(exp).str();
  if (twins) {
    j["beta"] = expansion_json(twins->first);
    j["gamma"] = expansion_json(twins->second);
  } else {
    j["beta"] = nullptr;
    j["gamma"] = nullptr;
  }
  emit(j);
  return 0;
}

int cmd_verify(const std::string& system, std::uint64_t count, std::uint64_t seed,
               std::uint64_t depth) {
  const QSystem qsys = parse_system_arg(system);
  std::mt19937_64 rng(seed);
  std::uint64_t pass = 0;
  json failures = json::array();
  for (std::uint64_t i = 0; i < count; ++i) {
    const Rational x = random_in_range(rng, qsys, 500);
    bool ok = false;
    std::string detail;
    try {
      ok = cantor::check_roundtrip(x, qsys, depth);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (ok) {
      ++pass;
    } else {
      json f;
      f["system"] = render_qsystem(qsys);
      f["x"] = x.str();
      f["depth"] = depth;
      if (!detail.empty()) f["error"] = detail;
      failures.push_back(std::move(f));
    }
  }
  json j;
  j["pass"] = pass;
  j["fail"] = count - pass;
  if (!failures.empty()) j["failures"] = std::move(failures);
  emit(j);
  return failures.empty() ? 0 : 5;
}

// Fixed battery of property checks over a seeded random corpus. Progress
// lines go to stderr; stdout carries only the summary JSON.
int cmd_selftest(std::uint64_t count, std::uint64_t seed) {
  const Check mode = mode_from_env();
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  auto report = [&](const char* name, bool ok) {
    (ok ? pass : fail) += 1;
    std::cerr << (ok ? "ok " : "FAIL ") << name << "\n";
  };

  {
    const QSystem qsys({}, {QTerm{2, 1}, QTerm{3, -1}});
    const Expansion enc = cantor::encode(Rational(Integer(1), Integer(6)), qsys, mode);
    const Bounds range = cantor::bounds(qsys);
    const QSystem alt({}, {QTerm{2, -1}, QTerm{2, 1}});
    const Expansion neg = cantor::encode(Rational(Integer(-2), Integer(3)), alt, mode);
    report("worked-chains", render_digit_stream(enc) == "1,2" && enc.finite() &&
                                range.lower.str() == "-2/5" && range.upper.str() == "3/5" &&
                                render_digit_stream(neg) == "(1,0)" &&
                                eval_ep(neg) == Rational(Integer(-2), Integer(3)));
  }

  {
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (std::uint64_t i = 0; i < count && ok; ++i) {
      const QSystem qsys = random_system(rng);
      const Rational x = random_in_range(rng, qsys, 500);
      ok = eval_ep(cantor::encode(x, qsys, mode)) == x;
    }
    report("roundtrip-random", ok);
  }

  {
    std::mt19937_64 rng(seed + 1);
    bool ok = true;
    const std::uint64_t cases = count < 100 ? count : 100;
    for (std::uint64_t i = 0; i < cases && ok; ++i) {
      const QSystem qsys = random_system(rng);
      const Rational x = random_in_range(rng, qsys, 500);
      ok = cantor::encode(x, qsys, mode).unroll(30) == encode_bruteforce(x, qsys, 30);
    }
    report("oracle-agreement", ok);
  }

  {
    std::mt19937_64 rng(seed + 2);
    bool ok = true;
    std::uniform_int_distribution<int> rank(0, 8);
    for (int i = 0; i < 50 && ok; ++i) {
      const QSystem qsys = random_system(rng);
      const Bounds range = cantor::bounds(qsys);
      ok = range.upper - range.lower == Rational(1);
      if (!ok) break;
      const int n = rank(rng);
      Digits base;
      for (int k = 1; k <= n; ++k) {
        std::uniform_int_distribution<Digit> digit(0, qsys.term(k).base - 1);
        base.push_back(digit(rng));
      }
      const auto [lower, upper] = cylinder_interval(cantor::Cylinder(qsys, base));
      ok = upper - lower == Rational(Integer(1), qsys.partial_product(static_cast<unsigned>(n)));
    }
    report("interval-widths", ok);
  }

  {
    std::mt19937_64 rng(seed + 3);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      const QSystem qsys = random_system(rng);
      // Prefix whose final digit can move one step against the sign, so the
      // built beta-tail expansion sits on a two-representation boundary.
      std::uniform_int_distribution<int> klen(1, 5);
      const int k = klen(rng);
      Digits prefix;
      for (int j = 1; j < k; ++j) {
        std::uniform_int_distribution<Digit> digit(0, qsys.term(j).base - 1);
        prefix.push_back(digit(rng));
      }
      const QTerm tk = qsys.term(static_cast<unsigned>(k));
      std::uniform_int_distribution<Digit> branch(tk.sign > 0 ? 1 : 0,
                                                  tk.sign > 0 ? tk.base - 1 : tk.base - 2);
      prefix.push_back(branch(rng));
      const std::uint64_t horizon =
          std::max<std::uint64_t>(static_cast<std::uint64_t>(k), qsys.preperiod_length());
      Digits pre = prefix;
      for (std::uint64_t j = static_cast<std::uint64_t>(k) + 1; j <= horizon; ++j)
        pre.push_back(beta_digit(qsys.term(j)));
      Digits per;
      for (std::uint64_t j = horizon + 1; j <= horizon + qsys.period_length(); ++j)
        per.push_back(beta_digit(qsys.term(j)));
      const Expansion boundary(qsys, pre, per);
      const Rational x = eval_ep(boundary);
      const auto twins = dual_representations(boundary);
      ok = twins.has_value() && eval_ep(twins->first) == x && eval_ep(twins->second) == x &&
           canonicalize(boundary) == cantor::encode(x, qsys, mode);
    }
    report("dual-twins", ok);
  }

  json j;
  j["pass"] = pass;
  j["fail"] = fail;
  emit(j);
  return fail == 0 ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for sign-variable Cantor series expansions"};
  app.require_subcommand(1);

  std::string system;
  std::string x_text;
  std::string digits_text;
  std::string base_text;
  std::uint64_t count = 100;
  std::uint64_t seed = 0;
  std::uint64_t depth = 30;

  auto* encode_cmd = app.add_subcommand("encode", "Expand a rational into signed digits");
  encode_cmd->add_option("--system", system, "System spec, e.g. \"pre:;per:2+,3-\"")->required();
  encode_cmd->add_option("--x", x_text, "Rational literal p/r (use --x=-p/r for negatives)")
      ->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a digit stream to an exact rational");
  eval_cmd->add_option("--system", system, "System spec")->required();
  eval_cmd->add_option("--digits", digits_text, "Digit stream, e.g. \"1,2\" or \"1(2,0)\"")
      ->required();

  auto* classify_cmd = app.add_subcommand("classify", "Report finiteness and cycle shape");
  classify_cmd->add_option("--system", system, "System spec")->required();
  classify_cmd->add_option("--x", x_text, "Rational literal")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Representable interval of a system");
  bounds_cmd->add_option("--system", system, "System spec")->required();

  auto* cylinder_cmd = app.add_subcommand("cylinder", "Exact interval of a cylinder");
  cylinder_cmd->add_option("--system", system, "System spec")->required();
  cylinder_cmd->add_option("--base", base_text, "Comma-separated base digits")->required();

  auto* dual_cmd = app.add_subcommand("dual", "Twin representations of an expansion");
  dual_cmd->add_option("--system", system, "System spec")->required();
  dual_cmd->add_option("--digits", digits_text, "Digit stream")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Randomized round-trip verification");
  verify_cmd->add_option("--system", system, "System spec")->required();
  verify_cmd->add_option("--count", count, "Number of random cases");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--depth", depth, "Oracle comparison depth");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in property suites");
  selftest_cmd->add_option("--count", count, "Cases per randomized suite (default 100)");
  selftest_cmd->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(system, x_text);
    if (eval_cmd->parsed()) return cmd_eval(system, digits_text);
    if (classify_cmd->parsed()) return cmd_classify(system, x_text);
    if (bounds_cmd->parsed()) return cmd_bounds(system);
    if (cylinder_cmd->parsed()) return cmd_cylinder(system, base_text);
    if (dual_cmd->parsed()) return cmd_dual(system, digits_text);
    if (verify_cmd->parsed()) return cmd_verify(system, count, seed, depth);
    if (selftest_cmd->parsed()) return cmd_selftest(count, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const AdmissibilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 2;
}
