// Command-line front end: verification suite, normal forms, growth tables
// and completion reports for presentation files.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "nchopf/error.hpp"
#include "nchopf/hopfcheck.hpp"
#include "nchopf/normal_words.hpp"
#include "nchopf/presentation_file.hpp"
#include "nchopf/suite.hpp"

namespace {

using namespace nchopf;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr int kDefaultDegree = 6;

ParamTable parse_params(const std::vector<std::string>& items) {
  ParamTable table;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::InvalidArgument, "expected name=value, got '" + item + "'");
    table[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
  }
  return table;
}

int cmd_verify(const SuiteOptions& options, const std::string& json_path, bool timing) {
  Report report = run_suite(options);
  std::cout << to_text(report);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + json_path);
    out << to_json(report, timing);
  }
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_nf(const std::string& file, const std::string& expr, const ParamTable& params, int degree) {
  AlgebraPresentation p = load_presentation(file, params);
  ParamTable table = param_table(p);
  for (const auto& [k, v] : params) table[k] = v;
  Polynomial e = parse_expression(expr, *p.alphabet, table);
  auto q = QuotientContext::build(std::move(p), std::max(degree, e.degree()));
  std::cout << q.render(q.nf(e)) << "\n";
  return kExitOk;
}

int cmd_growth(const std::string& file, const ParamTable& params, int maxlen, int degree) {
  auto q = QuotientContext::build(load_presentation(file, params), degree);
  q.require(maxlen);
  auto counts = count_normal_words(q.system, maxlen);
  auto cum = cumulative(counts);
  std::printf("%6s %20s %20s\n", "length", "count", "cumulative");
  for (int n = 0; n <= maxlen; ++n)
    std::printf("%6d %20llu %20llu\n", n, static_cast<unsigned long long>(counts[n]),
                static_cast<unsigned long long>(cum[n]));
  std::printf("slope %.4f\n", gk_estimate(cum));
  return kExitOk;
}

int cmd_complete(const std::string& file, const ParamTable& params, int degree) {
  auto q = QuotientContext::build(load_presentation(file, params), degree);
  const auto& c = q.certificate;
  const Alphabet& a = q.alphabet();
  std::cout << "rules: " << q.system.rules().size() << " (" << c.added.size() << " added)\n";
  for (const auto& r : c.added)
    std::cout << "  " << a.render(r.lead) << " -> " << render(r.rhs, a, q.system.order()) << "\n";
  std::cout << "verdict: " << (c.confluent() ? "confluent" : "incomplete") << " up to degree " << c.degree
            << (c.closed ? " (closed: all overlaps resolve)" : "") << "\n";
  std::cout << "resolved overlaps: " << c.resolved.size() << "\n";
  if (!c.confluent()) {
    std::cout << "reason: " << c.reason << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normal forms and Hopf-structure checks for finitely presented Hopf algebras"};
  app.require_subcommand(1);

  SuiteOptions suite;
  std::string json_path;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_name;
  verify->add_option("suite", suite_name, "Suite name")->required()->check(CLI::IsMember({"paper"}));
  verify->add_option("--degree", suite.degree, "Completion degree")->check(CLI::Range(2, 16));
  verify->add_option("--seed", suite.seed, "Seed for parameter samples");
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_flag("--no-timing", no_timing, "Write 0 for every elapsed time in the JSON report");

  std::string file, expr;
  std::vector<std::string> param_items;
  int degree = kDefaultDegree, maxlen = 0;

  auto* nf = app.add_subcommand("nf", "Print the normal form of an expression");
  nf->add_option("file", file, "Presentation file or @family")->required();
  nf->add_option("expr", expr, "Expression")->required();
  nf->add_option("--param", param_items, "Parameter binding name=value");
  nf->add_option("--degree", degree, "Minimum completion degree")->check(CLI::Range(1, 32));

  auto* growth = app.add_subcommand("growth", "Normal-word counts and fitted growth exponent");
  growth->add_option("file", file, "Presentation file or @family")->required();
  growth->add_option("--maxlen", maxlen, "Longest word length")->required()->check(CLI::Range(8, 400));
  growth->add_option("--param", param_items, "Parameter binding name=value");
  growth->add_option("--degree", degree, "Completion degree")->check(CLI::Range(1, 32));

  auto* complete = app.add_subcommand("complete", "Complete a presentation and print the certificate");
  complete->add_option("file", file, "Presentation file or @family")->required();
  complete->add_option("--degree", degree, "Completion degree")->required()->check(CLI::Range(1, 32));
  complete->add_option("--param", param_items, "Parameter binding name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ParamTable params = parse_params(param_items);
    if (*verify) return cmd_verify(suite, json_path, !no_timing);
    if (*nf) return cmd_nf(file, expr, params, degree);
    if (*growth) return cmd_growth(file, params, maxlen, degree);
    if (*complete) return cmd_complete(file, params, degree);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::UnknownLetter:
      case ErrorKind::InvalidArgument:
        return kExitUsage;
      default:
        return kExitCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
