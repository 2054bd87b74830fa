/// \file main.cpp
/// Command-line front end: batch verification with text/JSON reports,
/// check inventory listing, exact matrix export, and normal-form evaluation
/// of element literals.
///
/// Exit codes: 0 = no FAIL (WARN tolerated unless --strict), 1 = at least
/// one FAIL (or WARN under --strict), 2 = usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "uqfm/checks.hpp"
#include "uqfm/parse.hpp"
#include "uqfm/serialize.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using uqfm::CheckOptions;
using uqfm::CheckRecord;
using uqfm::OrderedJson;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

/// Parse "P/Q" (or a bare integer) into an exact rational; reject the
/// degenerate points 0 and +-1 where q - q^{-1} vanishes.
bool parse_q_half(const std::string& text, uqfm::Rat& out) {
  try {
    out = uqfm::Rat(text);
  } catch (const std::exception&) {
    return false;
  }
  if (out == 0 || out == 1 || out == -1) return false;
  return true;
}

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::vector<int> spins{0, 1, 2};
  std::string q_half = "5/7";
  std::string format = "text";
  bool fail_fast = false;
  bool strict = false;
  bool timings = false;
};

OrderedJson options_json(const VerifyArgs& a) {
  OrderedJson o;
  o["suites"] = a.suites.empty() ? std::vector<std::string>{"all"} : a.suites;
  o["spins"] = a.spins;
  o["q_half"] = a.q_half;
  o["format"] = a.format;
  o["fail_fast"] = a.fail_fast;
  o["strict"] = a.strict;
  o["timings"] = a.timings;
  return o;
}

int run_verify(const VerifyArgs& a) {
  CheckOptions opt;
  opt.spins = a.spins;
  if (!parse_q_half(a.q_half, opt.q_half))
    return usage_error("--q-half expects a rational P/Q with q^2 != 0, 1 "
                       "(got '" + a.q_half + "')");
  const bool text = a.format == "text";
  long long total_ms = 0;
  int n_pass = 0, n_fail = 0, n_warn = 0;
  auto progress = [&](const CheckRecord& r) {
    total_ms += r.millis;
    if (r.status == "PASS")
      ++n_pass;
    else if (r.status == "FAIL")
      ++n_fail;
    else
      ++n_warn;
    if (text) {
      std::cout << r.status << "  " << pad(r.check_id, 36) << "  "
                << pad(r.paper_anchor, 28) << "  " << r.millis << " ms\n";
      if (!r.residual_summary.empty())
        std::cout << "      residual: " << r.residual_summary << "\n";
    }
  };
  const auto records = uqfm::run_checks(a.suites, opt, a.fail_fast, progress);
  if (text) {
    std::cout << "\n" << records.size() << " checks: " << n_pass << " pass, "
              << n_fail << " fail, " << n_warn << " warn (" << total_ms
              << " ms total)\n";
  } else {
    OrderedJson doc;
    doc["version"] = kVersion;
    doc["options"] = options_json(a);
    OrderedJson checks = OrderedJson::array();
    for (const auto& r : records) {
      OrderedJson c;
      c["check_id"] = r.check_id;
      c["paper_anchor"] = r.paper_anchor;
      c["status"] = r.status;
      c["residual_summary"] = r.residual_summary;
      if (a.timings) c["millis"] = r.millis;
      checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    std::cout << doc.dump(2) << "\n";
  }
  if (n_fail > 0) return 1;
  if (a.strict && n_warn > 0) return 1;
  return 0;
}

int run_list(const std::vector<std::string>& suites,
             const std::string& format) {
  const bool all =
      suites.empty() ||
      std::find(suites.begin(), suites.end(), "all") != suites.end();
  if (format == "text") {
    for (const auto& def : uqfm::all_checks()) {
      if (!all && std::find(suites.begin(), suites.end(), def.suite) ==
                      suites.end())
        continue;
      std::cout << pad(def.id, 36) << "  " << pad(def.anchor, 28) << "  "
                << def.description << "\n";
    }
    return 0;
  }
  OrderedJson doc;
  doc["version"] = kVersion;
  OrderedJson checks = OrderedJson::array();
  for (const auto& def : uqfm::all_checks()) {
    if (!all && std::find(suites.begin(), suites.end(), def.suite) ==
                    suites.end())
      continue;
    OrderedJson c;
    c["check_id"] = def.id;
    c["paper_anchor"] = def.anchor;
    c["suite"] = def.suite;
    c["description"] = def.description;
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_export(const std::string& name, int two_s, const std::string& out) {
  uqfm::Mat<uqfm::Lpoly<uqfm::RatQ>> m;
  try {
    m = uqfm::export_object(name, two_s);
  } catch (const uqfm::UnknownName& e) {
    return usage_error(e.what());
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) return usage_error("cannot open output file '" + out + "'");
  f << uqfm::matrix_to_json(name, two_s, m).dump(2) << "\n";
  if (!f.good()) return usage_error("write to '" + out + "' failed");
  return 0;
}

int run_nf(const std::string& alg, const std::string& word) {
  try {
    std::cout << uqfm::nf_text(alg, word) << "\n";
  } catch (const uqfm::IllegalLetter& e) {
    return usage_error(e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification harness for braided exchange algebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand(
      "verify", "Run verification checks and report PASS/FAIL/WARN");
  verify->add_option("--suite", va.suites, "Suites to run (default: all)")
      ->check(CLI::IsMember(uqfm::suite_names()));
  verify->add_option("--spin", va.spins,
                     "Module sizes 2s for representation cross-checks "
                     "(default: 0 1 2)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--q-half", va.q_half,
                     "Numeric cross-check point p = q^{1/2} as P/Q "
                     "(default: 5/7)");
  verify->add_option("--format", va.format, "Report format (default: text)")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--fail-fast", va.fail_fast, "Stop after the first FAIL");
  verify->add_flag("--strict", va.strict, "Treat WARN as failure");
  verify->add_flag("--timings", va.timings,
                   "Include per-check millis in the JSON report");

  std::vector<std::string> list_suites;
  std::string list_format = "text";
  auto* list = app.add_subcommand(
      "list-checks", "Print the check inventory (id, anchor, description)");
  list->add_option("--suite", list_suites, "Restrict to these suites")
      ->check(CLI::IsMember(uqfm::suite_names()));
  list->add_option("--format", list_format, "Output format (default: text)")
      ->check(CLI::IsMember({"text", "json"}));

  std::string exp_name, exp_out;
  int exp_spin = 1;
  auto* exp = app.add_subcommand(
      "export-matrix", "Export a named matrix as exact JSON");
  exp->add_option("--object", exp_name, "Object name (see README)")
      ->required();
  exp->add_option("--spin", exp_spin,
                  "Module size 2s for operator matrices (default: 1)")
      ->check(CLI::NonNegativeNumber);
  exp->add_option("--out", exp_out, "Output file path")->required();

  std::string nf_alg, nf_word;
  auto* nf = app.add_subcommand(
      "nf", "Normalize an element literal in the chosen presentation");
  nf->add_option("algebra", nf_alg, "One of gl2|sl2|sl2h|word|eq")
      ->required();
  nf->add_option("word", nf_word,
                 "'*'-separated letters with optional ^n powers; empty = 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (verify->parsed()) return run_verify(va);
  if (list->parsed()) return run_list(list_suites, list_format);
  if (exp->parsed()) return run_export(exp_name, exp_spin, exp_out);
  if (nf->parsed()) return run_nf(nf_alg, nf_word);
  return 2;
}
