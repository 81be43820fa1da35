#ifndef FROBPAIR_CLI_HPP
#define FROBPAIR_CLI_HPP

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curves.hpp"
#include "errors.hpp"
#include "level.hpp"
#include "parse.hpp"
#include "regression.hpp"

namespace frobpair::cli {

enum ExitCode : int { ok = 0, input_error = 2, resource_error = 3, regression_failure = 4 };

struct LevelCommand {
  std::uint64_t p = 2;
  std::vector<std::string> vars;
  std::string num;
  std::string den;
  unsigned e_max = 6;
  bool want_certificate = false;
  bool json = false;
};

struct RootsCommand {
  std::uint64_t p = 2;
  unsigned e = 1;
  std::vector<std::string> vars;
  std::string poly;
  bool json = false;
};

struct CurveCommand {
  std::uint64_t p = 3;
  std::string h;
  std::string var = "x";
  std::optional<std::vector<Coeff>> stratified;
  bool json = false;
};

struct ExamplesCommand {
  std::string filter;
  bool include_long = false;
  bool json = false;
  unsigned threads = 0;
};

using nlohmann::json;

namespace detail {

// Maps library exceptions to exit codes; anything else propagates.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << '\n';
    return input_error;
  } catch (const OverflowError& ex) {
    err << "overflow: " << ex.what() << '\n';
    return resource_error;
  } catch (const ResourceError& ex) {
    err << "resource limit: " << ex.what() << '\n';
    return resource_error;
  } catch (const std::invalid_argument& ex) {
    err << "invalid input: " << ex.what() << '\n';
    return input_error;
  } catch (const std::domain_error& ex) {
    err << "invalid input: " << ex.what() << '\n';
    return input_error;
  }
}

inline Ring make_ring(std::uint64_t p, const std::vector<std::string>& vars) {
  return Ring(PrimeField(p), VarContext(vars));
}

inline json monomial_json(const Monomial& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) a.push_back(m[i]);
  return a;
}

inline json matrix_json(const FpMatrix& M) {
  json rows = json::array();
  for (const auto& r : M.to_rows()) rows.push_back(r);
  return rows;
}

} // namespace detail

inline json level_json(const LevelCommand& cmd, const MultiPoly& g, const MultiPoly& f, const LevelOutcome& out,
                       std::optional<bool> verified) {
  json j;
  j["query"] = {{"p", cmd.p}, {"vars", cmd.vars}, {"num", to_string(g)}, {"den", to_string(f)}, {"e_max", cmd.e_max}};
  j["outcome"] = {{"kind", kind_name(out.kind)}};
  if (out.kind != LevelOutcome::Kind::zero) j["outcome"]["e"] = out.e;
  if (out.certificate) {
    json terms = json::array();
    for (const auto& t : out.certificate->terms)
      terms.push_back({{"alpha", detail::monomial_json(t.alpha)}, {"cofactor", to_string(t.cofactor)}});
    j["certificate"] = {{"e", out.certificate->e}, {"terms", terms}, {"verified", verified.value_or(false)}};
  }
  return j;
}

inline int run_level(const LevelCommand& cmd, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (cmd.e_max == 0) throw std::invalid_argument("--max-e must be at least 1");
    Ring ring = detail::make_ring(cmd.p, cmd.vars);
    MultiPoly g = parse_poly(cmd.num, ring);
    MultiPoly f = parse_poly(cmd.den, ring);
    auto outcome = level_pair(g, f, cmd.e_max, cmd.want_certificate);
    std::optional<bool> verified;
    if (outcome.certificate) verified = verify_certificate(*outcome.certificate);

    if (cmd.json) {
      out << level_json(cmd, g, f, outcome, verified).dump(2) << '\n';
    } else {
      out << regression::describe(outcome) << '\n';
      if (outcome.certificate) {
        const auto& c = *outcome.certificate;
        out << "certificate (e = " << c.e << ", " << c.terms.size() << " terms):\n";
        for (const auto& t : c.terms)
          out << "  alpha = " << detail::monomial_json(t.alpha).dump() << "  s = " << to_string(t.cofactor) << '\n';
        out << "verified: " << (*verified ? "yes" : "no") << '\n';
      }
    }
    return (verified && !*verified) ? int(regression_failure) : int(ok);
  });
}

inline int run_roots(const RootsCommand& cmd, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (cmd.e == 0) throw std::invalid_argument("--e must be at least 1");
    Ring ring = detail::make_ring(cmd.p, cmd.vars);
    MultiPoly f = parse_poly(cmd.poly, ring);
    auto dec = pe_decompose(f, cmd.e);
    auto roots = ie_roots(f, cmd.e);
    if (cmd.json) {
      json entries = json::array();
      for (const auto& [alpha, c] : dec.entries)
        entries.push_back({{"alpha", detail::monomial_json(alpha)}, {"coefficient", to_string(c)}});
      json gens = json::array();
      for (const auto& g : roots.generators()) gens.push_back(to_string(g));
      json j = {{"query", {{"p", cmd.p}, {"e", cmd.e}, {"vars", cmd.vars}, {"poly", to_string(f)}}},
                {"decomposition", entries},
                {"generators", gens}};
      out << j.dump(2) << '\n';
    } else {
      out << "I_" << cmd.e << " = (";
      for (std::size_t i = 0; i < roots.size(); ++i) out << (i ? ", " : "") << to_string(roots.generators()[i]);
      out << ")\n";
    }
    return int(ok);
  });
}

inline int run_curve(const CurveCommand& cmd, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    Ring ring = detail::make_ring(cmd.p, {cmd.var});
    HyperellipticModel model(parse_poly(cmd.h, ring));
    auto M = cartier_manin(model);
    auto c = classify(M);
    auto kernel = stratification_kernel(M);
    std::optional<bool> strat;
    if (cmd.stratified) strat = stratified_test(M, *cmd.stratified);
    if (cmd.json) {
      json j = {{"query", {{"p", cmd.p}, {"h", to_string(model.h())}}},
                {"genus", c.genus},
                {"matrix", detail::matrix_json(M)},
                {"p_rank", c.p_rank},
                {"a_number", c.a_number},
                {"ordinary", c.ordinary},
                {"superspecial", c.superspecial},
                {"kernel", kernel}};
      if (strat) j["stratified"] = *strat;
      out << j.dump(2) << '\n';
    } else {
      out << "genus = " << c.genus << '\n';
      out << "cartier-manin = " << regression::describe(M) << '\n';
      out << "p_rank = " << c.p_rank << '\n';
      out << "a_number = " << c.a_number << '\n';
      out << "ordinary: " << (c.ordinary ? "yes" : "no") << '\n';
      out << "superspecial: " << (c.superspecial ? "yes" : "no") << '\n';
      out << "kernel = [";
      for (std::size_t i = 0; i < kernel.size(); ++i) out << (i ? "," : "") << json(kernel[i]).dump();
      out << "]\n";
      if (strat) out << "stratified: " << (*strat ? "yes" : "no") << '\n';
    }
    return int(ok);
  });
}

inline int run_examples(const ExamplesCommand& cmd, const std::vector<regression::RegressionCase>& cases,
                        std::ostream& out, std::ostream&) {
  auto reports = regression::run_cases(cases, cmd.filter, cmd.include_long, cmd.threads);
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (cmd.json) {
    json rows = json::array();
    for (const auto& r : reports)
      rows.push_back({{"name", r.name},
                      {"inputs", r.inputs},
                      {"expected", r.expected},
                      {"observed", r.observed},
                      {"provenance", r.provenance},
                      {"long_running", r.long_running},
                      {"passed", r.passed},
                      {"seconds", r.seconds}});
    out << json{{"cases", rows}, {"passed", all}}.dump(2) << '\n';
  } else {
    std::size_t width = 4;
    for (const auto& r : reports) width = std::max(width, r.name.size());
    for (const auto& r : reports) {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(int(width)) << r.name << "  " << std::right
          << std::fixed << std::setprecision(2) << std::setw(7) << r.seconds << "s  " << r.observed;
      if (!r.passed) out << "  (expected " << r.expected << ")";
      out << '\n';
    }
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed;
    out << passed << "/" << reports.size() << " cases passed\n";
  }
  return all ? int(ok) : int(regression_failure);
}

inline int run_examples(const ExamplesCommand& cmd, std::ostream& out, std::ostream& err) {
  return run_examples(cmd, regression::regression_cases(), out, err);
}

} // namespace frobpair::cli

#endif // FROBPAIR_CLI_HPP
