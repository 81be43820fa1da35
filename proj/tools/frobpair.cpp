#include <iostream>

#include <CLI11.hpp>

#include "frobpair/cli.hpp"

namespace {

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  using namespace frobpair::cli;
  CLI::App app{"frobpair: levels of Frobenius pairs, p^e-th root ideals and Cartier-Manin matrices"};
  app.require_subcommand(1);

  LevelCommand level;
  std::string level_vars;
  auto* lv = app.add_subcommand("level", "level of the pair (num, den)");
  lv->add_option("--p", level.p, "prime characteristic")->required();
  lv->add_option("--vars", level_vars, "comma-separated variable names")->required();
  lv->add_option("--num", level.num, "numerator g")->required();
  lv->add_option("--den", level.den, "denominator f")->required();
  lv->add_option("--max-e", level.e_max, "largest e to try")->capture_default_str();
  lv->add_flag("--certificate", level.want_certificate, "print and verify a certificate");
  lv->add_flag("--json", level.json, "JSON output");

  RootsCommand roots;
  std::string roots_vars;
  auto* rt = app.add_subcommand("roots", "ideal of p^e-th roots I_e(f)");
  rt->add_option("--p", roots.p, "prime characteristic")->required();
  rt->add_option("--e", roots.e, "exponent e")->capture_default_str();
  rt->add_option("--vars", roots_vars, "comma-separated variable names")->required();
  rt->add_option("--poly", roots.poly, "polynomial f")->required();
  rt->add_flag("--json", roots.json, "JSON output");

  CurveCommand curve;
  std::vector<frobpair::Coeff> strat;
  auto* cv = app.add_subcommand("curve", "Cartier-Manin data of y^2 = h(x)");
  cv->set_help_flag("--help", "print this help and exit");
  cv->add_option("--p", curve.p, "odd prime")->required();
  cv->add_option("--h", curve.h, "h(x), squarefree")->required();
  auto* strat_opt = cv->add_option("--stratified", strat, "coefficients a_0,...,a_{g-1} to test")->delimiter(',');
  cv->add_flag("--json", curve.json, "JSON output");

  ExamplesCommand examples;
  auto* ex = app.add_subcommand("examples", "run the regression table");
  ex->add_option("--filter", examples.filter, "substring of case names");
  ex->add_flag("--include-long", examples.include_long, "also run long cases");
  ex->add_flag("--json", examples.json, "JSON output");
  ex->add_option("--threads", examples.threads, "worker threads (0 picks automatically)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : int(input_error);
  }

  if (*lv) {
    level.vars = split_vars(level_vars);
    return run_level(level, std::cout, std::cerr);
  }
  if (*rt) {
    roots.vars = split_vars(roots_vars);
    return run_roots(roots, std::cout, std::cerr);
  }
  if (*cv) {
    if (*strat_opt) curve.stratified = strat;
    return run_curve(curve, std::cout, std::cerr);
  }
  return run_examples(examples, std::cout, std::cerr);
}
