// gpi: command-line front end for the graded-involution identity workbench.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpi/config.hpp"
#include "gpi/error.hpp"
#include "gpi/freealg.hpp"
#include "gpi/identities.hpp"
#include "gpi/report.hpp"
#include "gpi/selftest.hpp"

namespace {

enum Exit : int { kOk = 0, kInputError = 2, kResourceCap = 3, kInvariantFailure = 4 };

struct Options {
  std::string config;
  std::size_t max_degree = 0;
  bool minimal = false;
  std::string coeff = "q";
  bool json = false;
  std::uint64_t seed = 1;
  std::string expression;
  std::string second;
};

void emit(const Options& opt, const nlohmann::json& payload, const std::string& text) {
  if (opt.json)
    std::cout << payload.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_info(const Options& opt, const gpi::Grading& grading) {
  auto out = gpi::report::envelope("info", grading);
  out["info"] = gpi::report::grading_info(grading);
  emit(opt, out, gpi::report::grading_info_text(grading));
  return kOk;
}

int cmd_check(const Options& opt, const gpi::Grading& grading, gpi::CoeffRing ring) {
  const gpi::Group& group = grading.group();
  const auto f = gpi::parse_poly(opt.expression, group, ring);
  auto out = gpi::report::envelope("check", grading);
  out["ring"] = ring.to_string();
  out["expression"] = gpi::format_poly(f, group);
  const auto overall = gpi::is_identity(f, grading);
  out["is_identity"] = overall.is_identity;
  std::ostringstream text;
  text << "expression: " << gpi::format_poly(f, group) << '\n'
       << "verdict: " << (overall.is_identity ? "identity" : "not an identity") << '\n';

  bool all_certified = true;
  nlohmann::json comps = nlohmann::json::array();
  const auto components = gpi::multihomogeneous_components(f);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& part = components[i];
    const auto v = gpi::is_identity(part, grading);
    const auto r = gpi::u_reduce(part, grading);
    if (r.in_T != v.is_identity)
      throw gpi::InvariantFailure("reduction and evaluation disagree on " + gpi::format_poly(part, group));
    all_certified = all_certified && (!r.in_T || r.in_U_certified);
    comps.push_back({{"polynomial", gpi::format_poly(part, group)},
                     {"verdict", gpi::report::verdict(v)},
                     {"reduction", gpi::report::reduction(r, group)}});
    text << "component " << (i + 1) << ": " << gpi::format_poly(part, group) << '\n'
         << "  " << (v.is_identity ? "identity" : "not an identity") << '\n';
    for (const auto& e : v.offending)
      text << "  offending entry (" << e.row << "," << e.col << "): " << e.value.to_string() << '\n';
    std::istringstream lines(gpi::report::reduction_text(r, group));
    for (std::string line; std::getline(lines, line);) text << "  " << line << '\n';
  }
  out["components"] = comps;
  out["in_U_certified"] = overall.is_identity && all_certified;
  if (overall.is_identity) text << "in U: " << (all_certified ? "certified" : "certificate incomplete") << '\n';
  emit(opt, out, text.str());
  return kOk;
}

int cmd_eval(const Options& opt, const gpi::Grading& grading, gpi::CoeffRing ring) {
  const gpi::Group& group = grading.group();
  const auto f = gpi::parse_poly(opt.expression, group, ring);
  const auto value = gpi::evaluate(f, grading);
  auto out = gpi::report::envelope("eval", grading);
  out["ring"] = ring.to_string();
  out["expression"] = gpi::format_poly(f, group);
  out["value"] = gpi::report::matrix(value);
  emit(opt, out, "expression: " + gpi::format_poly(f, group) + "\n" + value.to_string() + "\n");
  return kOk;
}

int cmd_congruent(const Options& opt, const gpi::Grading& grading) {
  const gpi::Group& group = grading.group();
  const auto m1 = gpi::parse_monomial(opt.expression, group);
  const auto m2 = gpi::parse_monomial(opt.second, group);
  for (const auto* m : {&m1, &m2})
    if (gpi::is_monomial_identity(*m, grading).is_identity)
      throw gpi::PreconditionError("monomial " + gpi::format_monomial(*m, group) +
                                   " is an identity; congruence is defined on non-identities");
  const bool cong = gpi::congruent_mod_J(m1, m2, grading);
  std::optional<std::vector<gpi::RewriteStep>> steps;
  if (cong) steps = gpi::derivation_mod_J(m1, m2, grading);
  auto out = gpi::report::envelope("congruent", grading);
  out["m1"] = gpi::format_monomial(m1, group);
  out["m2"] = gpi::format_monomial(m2, group);
  out["congruent"] = cong;
  out["derivation"] = cong ? gpi::report::derivation(steps, group) : nlohmann::json(nullptr);
  std::ostringstream text;
  text << (cong ? "congruent" : "not congruent") << " modulo J\n";
  if (cong) {
    if (!steps) {
      text << "derivation: none found within the search cap\n";
    } else {
      text << "derivation (" << steps->size() << " steps):\n";
      for (const auto& s : *steps)
        text << "  " << gpi::to_string(s.kind) << " [" << s.first << "," << s.mid << "," << s.last
             << "] -> " << gpi::format_monomial(s.result, group) << '\n';
    }
  }
  emit(opt, out, text.str());
  return kOk;
}

int cmd_enumerate(const Options& opt, const gpi::Grading& grading) {
  if (opt.max_degree == 0) throw gpi::InvalidArgument("enumerate requires --max-deg N with N >= 1");
  const auto words = gpi::enumerate_monomial_identities(grading, opt.max_degree, opt.minimal);
  auto out = gpi::report::envelope("enumerate", grading);
  out["max_degree"] = opt.max_degree;
  out["minimal"] = opt.minimal;
  out["count"] = words.size();
  out["words"] = gpi::report::words(words, grading.group());
  std::ostringstream text;
  text << words.size() << (opt.minimal ? " minimal" : "") << " monomial identities of degree <= "
       << opt.max_degree << '\n';
  for (const auto& w : words) text << gpi::format_word(w, grading.group()) << '\n';
  emit(opt, out, text.str());
  return kOk;
}

int cmd_selftest(const Options& opt, const gpi::Grading& grading, gpi::CoeffRing ring) {
  gpi::SelftestOptions so;
  so.seed = opt.seed;
  so.ring = ring;
  const auto results = gpi::run_selftest(grading, so);
  auto out = gpi::report::envelope("selftest", grading);
  out["seed"] = opt.seed;
  out["ring"] = ring.to_string();
  nlohmann::json suites = nlohmann::json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    suites.push_back({{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"message", r.message}});
    text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
    if (!r.message.empty()) text << ": " << r.message;
    text << '\n';
  }
  out["suites"] = suites;
  out["passed"] = ok;
  text << (ok ? "all suites passed" : "some suites failed") << '\n';
  emit(opt, out, text.str());
  return ok ? kOk : kInvariantFailure;
}

int report_error(const Options& opt, const std::string& kind, const std::string& message, int code) {
  if (opt.json) {
    nlohmann::json err = {{"schema", gpi::report::kSchema}, {"error", {{"kind", kind}, {"message", message}}}};
    std::cout << err.dump(2) << '\n';
  }
  std::cerr << "gpi: " << kind << ": " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gpi: graded polynomial identities of matrix algebras with transpose involution"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config, "Grading config (JSON)");
  app.add_option("--max-deg", opt.max_degree, "Degree cap for enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--minimal", opt.minimal, "Only minimal identities");
  app.add_option("--coeff", opt.coeff, "Coefficient ring: q or modp:P");
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_option("--seed", opt.seed, "Seed for property suites");

  auto* info = app.add_subcommand("info", "Support, D(g), Im(g) and hat maps");
  auto* check = app.add_subcommand("check", "Decide whether an expression is an identity");
  check->add_option("expression", opt.expression, "Polynomial")->required();
  auto* eval = app.add_subcommand("eval", "Evaluate on generic matrices");
  eval->add_option("expression", opt.expression, "Polynomial")->required();
  auto* congruent = app.add_subcommand("congruent", "Congruence of two monomials modulo J");
  congruent->add_option("m1", opt.expression, "First monomial")->required();
  congruent->add_option("m2", opt.second, "Second monomial")->required();
  auto* enumerate = app.add_subcommand("enumerate", "List index-free monomial identities");
  auto* selftest = app.add_subcommand("selftest", "Run the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const auto ring = gpi::CoeffRing::parse(opt.coeff);
    if (opt.config.empty()) throw gpi::InvalidArgument("--config PATH is required");
    const auto grading = gpi::load_grading_config(opt.config);
    if (info->parsed()) return cmd_info(opt, grading);
    if (check->parsed()) return cmd_check(opt, grading, ring);
    if (eval->parsed()) return cmd_eval(opt, grading, ring);
    if (congruent->parsed()) return cmd_congruent(opt, grading);
    if (enumerate->parsed()) return cmd_enumerate(opt, grading);
    if (selftest->parsed()) return cmd_selftest(opt, grading, ring);
  } catch (const gpi::ParseError& e) {
    return report_error(opt, "parse error", e.what(), kInputError);
  } catch (const gpi::ResourceError& e) {
    return report_error(opt, "resource cap", e.what(), kResourceCap);
  } catch (const gpi::InvariantFailure& e) {
    return report_error(opt, "invariant failure", e.what(), kInvariantFailure);
  } catch (const gpi::Error& e) {
    return report_error(opt, "input error", e.what(), kInputError);
  } catch (const std::exception& e) {
    return report_error(opt, "internal error", e.what(), kInvariantFailure);
  }
  return kInputError;
}
