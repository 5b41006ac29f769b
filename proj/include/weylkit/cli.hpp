#pragma once

// Command-line front end. cli_main parses arguments, dispatches one verb and
// writes text or JSON to `out`; diagnostics go to `err`.
//
// Exit codes: 0 success, 1 computation error or failed suite, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "weylkit/error.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/localization.hpp"
#include "weylkit/pbw.hpp"
#include "weylkit/quadratic_dual.hpp"
#include "weylkit/render.hpp"
#include "weylkit/shriek.hpp"
#include "weylkit/verify.hpp"

namespace weylkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kExpressionGrammar = R"(Expression grammar:
  expr    := term (('+' | '-') term)*
  term    := ['-'] factor ('*' factor)*
  factor  := atom ['^' INT]
  atom    := RATIONAL | 'x'INT | 'd'INT | 'z' | '(' expr ')'
  RATIONAL:= INT ['/' INT]
Generators are x1..xn, d1..dn and z (z is not available in A). Names are
case-insensitive. Pass "--" before an expression that starts with '-'.
)";

struct CliOptions {
  std::string verb;
  std::size_t n = 1;
  std::string algebra = "B";
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultBudget;
  bool bless = false;
  bool timing = false;
  std::uint32_t max_degree = 8;
  std::vector<std::string> args;
};

namespace detail {

class UsageError : public Error {
 public:
  using Error::Error;
};

inline void require_args(const CliOptions& o, std::size_t count, const char* shape) {
  if (o.args.size() != count) throw UsageError(o.verb + " expects " + shape);
}

/// C! is carried inside B!; results outside the z-free part are rejected.
inline ShriekElement in_c_or_throw(ShriekElement e, AlgebraKind kind) {
  if (kind == AlgebraKind::CShriek && !in_c_subalgebra(e))
    throw NotInSubalgebra("result " + render(e) + " has a z component and is not in C!");
  return e;
}

inline ShriekElement shriek_value(const std::string& text, std::size_t n, AlgebraKind kind) {
  return in_c_or_throw(reduce_shriek(parse(text, n, kind), n), kind);
}

inline void emit_element(std::ostream& out, const CliOptions& o, const AlgebraElement& e) {
  out << render(e, o.json ? Format::Json : Format::Text) << "\n";
}

inline void emit_shriek(std::ostream& out, const CliOptions& o, const ShriekElement& e, AlgebraKind kind) {
  out << render(e, o.json ? Format::Json : Format::Text, kind) << "\n";
}

inline std::vector<std::size_t> dims_of(AlgebraKind kind, std::size_t n, std::uint32_t max_degree) {
  std::vector<std::size_t> dims;
  if (is_shriek(kind)) {
    const bool c_only = kind == AlgebraKind::CShriek;
    dims.assign(c_only ? 2 * n + 1 : 2 * n + 2, 0);
    for (const auto& w : shriek_basis(n))
      if (!(c_only && w.z)) ++dims[w.degree()];
    return dims;
  }
  for (std::uint32_t d = 0; d <= max_degree; ++d) dims.push_back(basis_of_degree(kind, n, d).size());
  return dims;
}

inline int run_verb(const CliOptions& o, std::ostream& out, std::ostream& err) {
  const auto kind = parse_algebra_kind(o.algebra);
  const std::size_t n = o.n;
  if (n < 1) throw UnsupportedN("--n must be at least 1");

  if (o.verb == "nf") {
    require_args(o, 1, "one expression");
    if (is_shriek(kind)) emit_shriek(out, o, shriek_value(o.args[0], n, kind), kind);
    else emit_element(out, o, normal_form(parse(o.args[0], n, kind), kind, n));
    return kExitOk;
  }

  if (o.verb == "mul" || o.verb == "comm") {
    require_args(o, 2, "two expressions");
    const bool bracket = o.verb == "comm";
    if (is_shriek(kind)) {
      const auto a = shriek_value(o.args[0], n, kind), b = shriek_value(o.args[1], n, kind);
      emit_shriek(out, o, in_c_or_throw(bracket ? a * b - b * a : a * b, kind), kind);
    } else {
      const auto a = normal_form(parse(o.args[0], n, kind), kind, n);
      const auto b = normal_form(parse(o.args[1], n, kind), kind, n);
      emit_element(out, o, bracket ? commutator(a, b) : a * b);
    }
    return kExitOk;
  }

  if (o.verb == "dims") {
    require_args(o, 0, "no expressions");
    const auto dims = dims_of(kind, n, o.max_degree);
    if (o.json) {
      OrderedJson j;
      j["algebra"] = std::string(to_string(kind));
      j["n"] = n;
      j["dims"] = dims;
      out << j.dump() << "\n";
    } else {
      out << join_numbers(dims) << "\n";
    }
    return kExitOk;
  }

  if (o.verb == "center") {
    require_args(o, 0, "no expressions");
    if (kind != AlgebraKind::B) throw KindMismatch("center is computed for --algebra B");
    OrderedJson degrees = OrderedJson::array();
    for (std::uint32_t d = 0; d <= o.max_degree; ++d) {
      const auto basis = centralizer_in_degree(kind, n, d);
      if (o.json) {
        OrderedJson span = OrderedJson::array();
        for (const auto& b : basis) span.push_back(to_json(b));
        degrees.push_back({{"degree", d}, {"basis", std::move(span)}});
      } else {
        out << "degree " << d << ":";
        for (std::size_t i = 0; i < basis.size(); ++i) out << (i ? ", " : " ") << render(basis[i]);
        out << "\n";
      }
    }
    if (o.json) out << OrderedJson{{"algebra", "B"}, {"n", n}, {"center", std::move(degrees)}}.dump() << "\n";
    return kExitOk;
  }

  if (o.verb == "dual") {
    require_args(o, 0, "no expressions");
    if (kind != AlgebraKind::B && kind != AlgebraKind::C) throw KindMismatch("dual needs --algebra B or C");
    const auto dual = dual_presentation(kind, n);
    // The readable presentation is printed only after it is matched against the computed complement.
    const auto complement = orthogonal_complement(relations_of(kind, n));
    if (!spans_equal(dual.relations, complement.basis, dual.generators.size()))
      throw Error("readable dual presentation does not match the orthogonal complement");
    if (o.json) {
      out << to_json(dual).dump() << "\n";
    } else {
      for (const auto& r : dual.relations) out << render_relation(r, dual.generators) << "\n";
    }
    return kExitOk;
  }

  if (o.verb == "nakayama") {
    require_args(o, 0, "no expressions");
    if (n > 2) throw UnsupportedN("nakayama supports 1 <= n <= 2");
    const auto sigma = nakayama(n);
    const auto k = sigma.z_scalar();
    if (o.json) {
      OrderedJson images = OrderedJson::object();
      for (const auto& g : generators_of(AlgebraKind::BShriek, n)) images[to_string(g)] = to_json(sigma.image(g));
      OrderedJson j;
      j["n"] = n;
      j["sigma"] = std::move(images);
      j["k"] = k ? OrderedJson(to_fraction_string(*k)) : OrderedJson(nullptr);
      out << j.dump() << "\n";
    } else {
      for (const auto& g : generators_of(AlgebraKind::BShriek, n))
        out << "sigma(" << to_string(g) << ") = " << render(sigma.image(g)) << "\n";
      out << "k = " << (k ? to_display_string(*k) : std::string("none")) << "\n";
    }
    return kExitOk;
  }

  if (o.verb == "homogenize") {
    require_args(o, 1, "one expression in A");
    const auto [b, k] = homogenize(normal_form(parse(o.args[0], n, AlgebraKind::A), AlgebraKind::A, n));
    if (o.json) out << OrderedJson{{"num", to_json(b)}, {"zpow", k}}.dump() << "\n";
    else out << "(" << render(b) << ", " << k << ")\n";
    return kExitOk;
  }

  if (o.verb == "dehomogenize") {
    require_args(o, 1, "one expression in B");
    emit_element(out, o, dehomogenize(normal_form(parse(o.args[0], n, AlgebraKind::B), AlgebraKind::B, n)));
    return kExitOk;
  }

  if (o.verb == "theta") {
    require_args(o, 2, "a numerator in B and a z power");
    const auto k = std::stoul(o.args[1]);
    const auto b = normal_form(parse(o.args[0], n, AlgebraKind::B), AlgebraKind::B, n);
    emit_element(out, o, theta(LocalizedElement::make(b, static_cast<std::uint32_t>(k))));
    return kExitOk;
  }

  if (o.verb == "mu") {
    require_args(o, 2, "an expression in A and an integer degree");
    const auto t = std::stoll(o.args[1]);
    const auto e = mu(normal_form(parse(o.args[0], n, AlgebraKind::A), AlgebraKind::A, n), t);
    out << render(e, o.json ? Format::Json : Format::Text) << "\n";
    return kExitOk;
  }

  if (o.verb == "verify") {
    require_args(o, 1, "a suite name");
    SuiteOptions options{n, o.seed, o.budget, o.bless, {}};
    const auto report = run_suite(o.args[0], options);
    if (o.json) out << to_json(report, o.timing).dump(2) << "\n";
    else out << render_report(report, o.timing);
    if (!report.passed()) err << "suite " << report.suite_name << " failed\n";
    return report.passed() ? kExitOk : kExitFailure;
  }

  throw UsageError("unknown verb '" + o.verb + "'");
}

}  // namespace detail

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for Weyl algebras, their homogenizations and Koszul duals", "weylkit"};
  app.footer(kExpressionGrammar);
  CliOptions o;
  app.add_option("verb", o.verb,
                 "nf, mul, comm, dims, center, dual, nakayama, homogenize, dehomogenize, theta, mu, verify")
      ->required();
  app.add_option("args", o.args, "expressions, or a suite name for verify");
  app.add_option("--n", o.n, "number of generator pairs")->capture_default_str();
  app.add_option("--algebra", o.algebra, "A, B, C, B! or C!")->capture_default_str();
  app.add_flag("--json", o.json, "emit JSON");
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--budget", o.budget, "samples per randomized check")->capture_default_str();
  app.add_flag("--bless", o.bless, "write golden files instead of comparing");
  app.add_flag("--timing", o.timing, "include per-check timings in verify output");
  app.add_option("--max-degree", o.max_degree, "largest degree for dims and center on A, B, C")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return detail::run_verb(o, out, err);
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n" << kExpressionGrammar;
    return kExitFailure;
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument&) {
    err << "usage error: expected an integer argument\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace weylkit
