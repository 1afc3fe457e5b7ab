#ifndef SRPOLY_TOOLS_CLI_HPP
#define SRPOLY_TOOLS_CLI_HPP

// Command-line front end.  Every subcommand prints one JSON document on
// stdout (keys sorted, so output is byte-stable) and diagnostics on stderr.
//
// Exit codes: 0 ok, 1 domain/usage error, 2 verification failure,
// 3 resource/budget error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "srpoly/srpoly.hpp"

namespace srpoly::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kDomain = 1, kVerification = 2, kResource = 3 };

using json = nlohmann::json;

namespace detail {

struct Options {
  std::string field;
  std::string modulus;
  std::string a;
  std::string poly;
  std::uint64_t seed = kDefaultSeed;
  int n = 1;
  std::size_t budget = kDefaultDegreeBudget;
  bool enumerate = false;
  bool verify = false;
  bool csv = false;
  std::string theorem;
  std::string fields = "3,5,7,9";
  int nmax = 3;
  std::string out;
};

inline Field resolve_field(const Options& o) {
  Field f = parse_field_spec(o.field);
  if (o.modulus.empty()) return f;
  std::vector<std::uint64_t> coeffs;
  std::stringstream ss(o.modulus);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto v = srpoly::detail::parse_int(srpoly::detail::strip_spaces(item), "modulus coefficient");
    if (v < 0) throw DomainError("modulus coefficients must be nonnegative");
    coeffs.push_back(static_cast<std::uint64_t>(v));
  }
  if (coeffs.size() != f.e() + 1) throw DomainError("modulus degree does not match the field spec");
  return Field::with_modulus(f.p(), std::move(coeffs));
}

inline std::string modulus_string(const Field& f) {
  std::string out;
  for (std::size_t i = 0; i < f.modulus().size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(f.modulus()[i]);
  }
  return out;
}

inline json poly_json(const Polynomial& f) { return {{"coeffs", to_string(f)}, {"pretty", to_pretty(f)}}; }

inline json envelope(const std::string& command, const std::optional<Field>& field, std::uint64_t seed) {
  json meta{{"seed", seed}, {"version", kVersion}};
  if (field) {
    meta["field"] = field_spec(*field);
    meta["modulus"] = modulus_string(*field);
  }
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"status", "ok"}, {"metadata", meta}};
}

inline json report_json(const TheoremReport& r) {
  return {{"theorem", r.id}, {"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}, {"note", r.note}};
}

inline std::vector<Field> parse_field_list(const std::string& list) {
  std::vector<Field> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_field_spec(item));
  if (out.empty()) throw DomainError("empty field list");
  return out;
}

}  // namespace detail

/// Runs the CLI with the given arguments (argv[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"a-reciprocal polynomials over odd-characteristic finite fields", "srpoly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto add_field = [&](CLI::App* sc, bool required = true) {
    auto* opt = sc->add_option("--field", o.field, "field spec: p, p^e or a prime power q");
    if (required) opt->required();
    sc->add_option("--modulus", o.modulus, "explicit modulus over F_p, ascending comma-separated");
  };
  auto add_a = [&](CLI::App* sc) { sc->add_option("--a", o.a, "nonzero parameter a")->required(); };
  auto add_poly = [&](CLI::App* sc) {
    sc->add_option("--poly", o.poly, "ascending comma-separated coefficients")->required();
  };
  auto add_seed = [&](CLI::App* sc) { sc->add_option("--seed", o.seed, "seed for randomized factor splitting"); };

  auto* recip = app.add_subcommand("recip", "a-reciprocal of a monic polynomial");
  add_field(recip); add_a(recip); add_poly(recip);
  auto* cls = app.add_subcommand("classify", "a-self-reciprocal classification");
  add_field(cls); add_a(cls); add_poly(cls);
  auto* par = app.add_subcommand("parity", "parity of the number of irreducible factors");
  add_field(par); add_a(par); add_poly(par); add_seed(par);
  par->add_flag("--verify", o.verify, "confirm with the factorization oracle");
  auto* tr = app.add_subcommand("transform", "x^n f(x + a/x)");
  add_field(tr); add_a(tr); add_poly(tr);
  auto* itr = app.add_subcommand("invtransform", "g with x^n g(x + a/x) = f");
  add_field(itr); add_a(itr); add_poly(itr);
  auto* fac = app.add_subcommand("factor", "complete factorization");
  add_field(fac); add_poly(fac); add_seed(fac);
  auto* cnt = app.add_subcommand("count", "number of nontrivial a-srim of degree 2n");
  add_field(cnt); add_a(cnt);
  cnt->add_option("--n", o.n, "half degree")->required()->check(CLI::PositiveNumber);
  cnt->add_flag("--enumerate", o.enumerate, "also count by exhaustive enumeration");
  auto* cen = app.add_subcommand("census", "formula/enumeration sweep written as CSV");
  cen->add_option("--fields", o.fields, "comma-separated field orders or specs");
  cen->add_option("--nmax", o.nmax, "largest half degree")->check(CLI::PositiveNumber);
  cen->add_option("--out", o.out, "CSV output path (stdout when omitted)");
  cen->add_flag("--csv", o.csv, "print CSV on stdout instead of the JSON summary");
  auto* ver = app.add_subcommand("verify", "check a statement over (field, a, n)");
  add_field(ver); add_a(ver); add_seed(ver);
  ver->add_option("--theorem", o.theorem, "1..10, cor2, eq2 or all")->required();
  ver->add_option("--n", o.n, "half degree / degree parameter")->required()->check(CLI::PositiveNumber);
  ver->add_option("--budget", o.budget, "coefficient ceiling for H_{n,q}");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::optional<Field> field;
  auto fail = [&](int code, const std::string& msg) {
    err << "error: " << msg << "\n";
    json doc = detail::envelope(command, field, o.seed);
    doc["status"] = "error";
    doc["error"] = msg;
    out << doc.dump(2) << "\n";
    return code;
  };

  try {
    if (!o.field.empty()) field = detail::resolve_field(o);
    json doc = detail::envelope(command, field, o.seed);
    json& payload = doc["payload"];
    int code = kOk;

    auto element = [&] {
      const auto a = parse_element(*field, o.a);
      if (a.is_zero()) throw DomainError("parameter a must be nonzero");
      return a;
    };
    auto polynomial = [&] { return parse_polynomial(*field, o.poly); };

    if (command == "recip") {
      const auto a = element();
      const auto f = polynomial();
      const auto r = a_reciprocal(f, a);
      payload = {{"a", to_string(a)}, {"input", detail::poly_json(f)}, {"result", detail::poly_json(r)}};
    } else if (command == "classify") {
      const auto a = element();
      const auto f = polynomial();
      const auto c = classify(f, a);
      payload = {{"a", to_string(a)}, {"input", detail::poly_json(f)}, {"verdict", to_string(c.verdict)}};
      payload["half_degree"] = c.half_degree ? json(*c.half_degree) : json(nullptr);
    } else if (command == "parity") {
      const auto a = element();
      const auto f = polynomial();
      const auto v = parity_indicator(f, a);
      const auto pair = eval_at_sqrt_pair(f, a);
      payload = {{"a", to_string(a)},
                 {"input", detail::poly_json(f)},
                 {"verdict", to_string(v.verdict)},
                 {"indicator", to_string(v.indicator)},
                 {"A", to_string(pair.A)},
                 {"B", to_string(pair.B)},
                 {"A2_minus_aB2", to_string(pair.value)},
                 {"reason", v.reason}};
      if (o.verify) {
        const auto fz = factorize(f, o.seed);
        const int r = fz.count(true);
        json oracle{{"factors_with_multiplicity", r}, {"factors_distinct", fz.count(false)},
                    {"squarefree", is_squarefree(f)}};
        if (v.verdict == Parity::NotApplicable) {
          oracle["agrees"] = nullptr;
        } else {
          const bool agrees = (r % 2 == 0) == (v.verdict == Parity::Even);
          oracle["agrees"] = agrees;
          if (!agrees) code = kVerification;
        }
        payload["oracle"] = oracle;
      }
    } else if (command == "transform") {
      const auto a = element();
      const auto f = polynomial();
      payload = {{"a", to_string(a)}, {"input", detail::poly_json(f)},
                 {"result", detail::poly_json(quadratic_transform(f, a))}};
    } else if (command == "invtransform") {
      const auto a = element();
      const auto f = polynomial();
      payload = {{"a", to_string(a)}, {"input", detail::poly_json(f)}, {"result", detail::poly_json(g_from_srm(f, a))}};
    } else if (command == "factor") {
      const auto f = polynomial();
      const auto fz = factorize(f, o.seed);
      json list = json::array();
      for (const auto& fc : fz.factors) {
        json item = detail::poly_json(fc.poly);
        item["multiplicity"] = fc.multiplicity;
        list.push_back(item);
      }
      payload = {{"input", detail::poly_json(f)},
                 {"unit", to_string(fz.unit)},
                 {"factors", list},
                 {"count_with_multiplicity", fz.count(true)},
                 {"count_distinct", fz.count(false)}};
    } else if (command == "count") {
      const auto a = element();
      const auto row = census_row(*field, a, o.n, o.enumerate);
      payload = {{"q", row.q}, {"a", to_string(row.a)}, {"n", row.n}, {"delta", row.delta},
                 {"si_formula", row.si_formula}};
      payload["si_enumerated"] = o.enumerate ? json(row.si_enumerated) : json(nullptr);
      payload["agreement"] = o.enumerate ? json(row.agreement) : json(nullptr);
      if (o.enumerate && !row.agreement) code = kVerification;
    } else if (command == "census") {
      std::ostringstream csv;
      csv << kCensusCsvHeader << "\n";
      std::size_t rows = 0;
      bool all_agree = true;
      for (const auto& fd : detail::parse_field_list(o.fields)) {
        for (const auto& a : fd.nonzero_elements()) {
          for (int n = 1; n <= o.nmax; ++n) {
            const auto row = census_row(fd, a, n);
            all_agree = all_agree && row.agreement;
            csv << to_csv_line(row) << "\n";
            ++rows;
          }
        }
      }
      if (!all_agree) code = kVerification;
      if (!o.out.empty()) {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) throw ResourceError("cannot write " + o.out);
        file << csv.str();
      }
      if (o.csv || o.out.empty()) {
        out << csv.str();
        return code;
      }
      payload = {{"rows", rows}, {"out", o.out}, {"all_agree", all_agree}, {"fields", o.fields}, {"nmax", o.nmax}};
    } else if (command == "verify") {
      const auto a = element();
      std::vector<std::string> ids;
      if (o.theorem == "all") {
        ids = theorem_ids();
      } else {
        ids.push_back(o.theorem);
      }
      json reports = json::array();
      bool passed = true;
      for (const auto& id : ids) {
        const auto rep = check_theorem(id, *field, a, o.n, o.seed, o.budget);
        passed = passed && rep.passed;
        reports.push_back(detail::report_json(rep));
      }
      payload = {{"a", to_string(a)}, {"n", o.n}, {"passed", passed}, {"reports", reports}};
      if (!passed) code = kVerification;
    }
    out << doc.dump(2) << "\n";
    return code;
  } catch (const ResourceError& e) {
    return fail(kResource, e.what());
  } catch (const InternalError& e) {
    return fail(kVerification, e.what());
  } catch (const Error& e) {
    return fail(kDomain, e.what());
  }
}

}  // namespace srpoly::cli

#endif  // SRPOLY_TOOLS_CLI_HPP
