#ifndef FROBPAIR_REGRESSION_HPP
#define FROBPAIR_REGRESSION_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "curves.hpp"
#include "level.hpp"
#include "parse.hpp"

namespace frobpair::regression {

struct CaseResult {
  bool passed = false;
  std::string observed;
};

struct RegressionCase {
  std::string name;
  std::string inputs;
  std::string expected;
  // "published": a value stated for this example in the literature.
  // "computed": verified here by an independent computation.
  std::string provenance;
  bool long_running = false;
  std::function<CaseResult()> run;
};

struct CaseReport {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string provenance;
  bool long_running = false;
  bool passed = false;
  std::string observed;
  double seconds = 0;
};

inline std::string describe(const LevelOutcome& o) {
  switch (o.kind) {
    case LevelOutcome::Kind::zero: return "level = 0";
    case LevelOutcome::Kind::finite: return "level = " + std::to_string(o.e);
    case LevelOutcome::Kind::exceeds_bound: return "level > " + std::to_string(o.e) + " (undetermined)";
  }
  return "?";
}

inline std::string describe(const FpMatrix& M) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < M.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < M.cols(); ++c) os << (c ? "," : "") << M.at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace detail {

inline Ring make_ring(std::uint64_t p, std::vector<std::string> vars) { return Ring(PrimeField(p), VarContext(std::move(vars))); }

// Level of a pair; finite outcomes must also carry a verifying certificate.
inline RegressionCase level_case(std::string name, std::uint64_t p, std::vector<std::string> vars, std::string num,
                                 std::string den, LevelOutcome::Kind kind, unsigned e, unsigned e_max,
                                 std::string provenance, bool long_running = false) {
  std::string inputs = "p=" + std::to_string(p) + " g=" + num + " f=" + den;
  LevelOutcome want{kind, e, std::nullopt};
  std::string expected = describe(want);
  auto run = [=]() -> CaseResult {
    Ring ring = make_ring(p, vars);
    auto got = level_pair(parse_poly(num, ring), parse_poly(den, ring), e_max);
    bool ok = got.kind == kind && got.e == e;
    std::string observed = describe(got);
    if (got.kind == LevelOutcome::Kind::finite) {
      bool verified = got.certificate && verify_certificate(*got.certificate);
      ok = ok && verified;
      observed += verified ? ", certificate verified" : ", certificate FAILED";
    }
    return {ok, observed};
  };
  return {std::move(name), std::move(inputs), std::move(expected), std::move(provenance), long_running, run};
}

inline RegressionCase roots_case(std::string name, std::uint64_t p, std::vector<std::string> vars, std::string poly,
                                 unsigned e, std::vector<std::string> expected_gens, std::string provenance) {
  std::string inputs = "I_" + std::to_string(e) + "(" + poly + "), p=" + std::to_string(p);
  std::string expected = "(";
  for (std::size_t i = 0; i < expected_gens.size(); ++i) expected += (i ? ", " : "") + expected_gens[i];
  expected += ")";
  auto run = [=]() -> CaseResult {
    Ring ring = make_ring(p, vars);
    auto got = ie_roots(parse_poly(poly, ring), e);
    IdealGens want(ring);
    for (const auto& s : expected_gens) want.add(parse_poly(s, ring));
    std::string observed = "(";
    for (std::size_t i = 0; i < got.size(); ++i) observed += (i ? ", " : "") + to_string(got.generators()[i]);
    observed += ")";
    return {ideal_equal(got, want), observed};
  };
  return {std::move(name), std::move(inputs), std::move(expected), std::move(provenance), false, run};
}

struct CurveExpectation {
  std::optional<std::vector<std::vector<Coeff>>> matrix;
  std::optional<std::size_t> p_rank;
  std::optional<bool> ordinary;
  std::optional<bool> superspecial;
};

inline RegressionCase curve_case(std::string name, std::uint64_t p, std::string h, CurveExpectation want,
                                 std::string provenance) {
  std::string inputs = "y^2=" + h + ", p=" + std::to_string(p);
  std::ostringstream ex;
  if (want.matrix) ex << "M=" << describe(FpMatrix(PrimeField(p), *want.matrix)) << ' ';
  if (want.p_rank) ex << "p_rank=" << *want.p_rank << ' ';
  if (want.ordinary) ex << "ordinary=" << (*want.ordinary ? "yes" : "no") << ' ';
  if (want.superspecial) ex << "superspecial=" << (*want.superspecial ? "yes" : "no") << ' ';
  std::string expected = ex.str();
  if (!expected.empty()) expected.pop_back();
  auto run = [=]() -> CaseResult {
    Ring ring = make_ring(p, {"x"});
    HyperellipticModel model(parse_poly(h, ring));
    auto M = cartier_manin(model);
    auto c = classify(M);
    bool ok = true;
    if (want.matrix) ok = ok && M == FpMatrix(PrimeField(p), *want.matrix);
    if (want.p_rank) ok = ok && c.p_rank == *want.p_rank;
    if (want.ordinary) ok = ok && c.ordinary == *want.ordinary;
    if (want.superspecial) ok = ok && c.superspecial == *want.superspecial;
    std::ostringstream os;
    os << "M=" << describe(M) << " p_rank=" << c.p_rank << " a_number=" << c.a_number
       << " ordinary=" << (c.ordinary ? "yes" : "no") << " superspecial=" << (c.superspecial ? "yes" : "no");
    return {ok, os.str()};
  };
  return {std::move(name), std::move(inputs), std::move(expected), std::move(provenance), false, run};
}

} // namespace detail

inline std::vector<RegressionCase> regression_cases() {
  using K = LevelOutcome::Kind;
  using detail::curve_case;
  using detail::level_case;
  using detail::roots_case;
  const std::vector<std::string> det_vars{"u", "v", "w", "x", "y", "z"};
  const std::vector<std::string> xyz{"x", "y", "z"};
  const std::vector<std::string> xy{"x", "y"};
  const std::vector<std::string> xyzw{"x", "y", "z", "w"};
  const std::string d1 = "(v*z-w*y)", d2 = "(w*x-u*z)", d3 = "(u*y-v*x)";

  std::vector<RegressionCase> cases;
  for (std::uint64_t p : {2, 3, 5}) {
    auto sp = "/p" + std::to_string(p);
    cases.push_back(level_case("determinantal/w-d1d2" + sp, p, det_vars, "w", d1 + "*" + d2, K::finite, 1, 3, "published"));
    cases.push_back(level_case("determinantal/v-d1d3" + sp, p, det_vars, "v", d1 + "*" + d3, K::finite, 1, 3, "published"));
    cases.push_back(level_case("determinantal/u-d2d3" + sp, p, det_vars, "u", d2 + "*" + d3, K::finite, 1, 3, "published"));
  }

  cases.push_back(roots_case("fermat-pair/roots/p2", 2, xyz, "x*y*z*(x^3+y^3+z^3)", 1, {"x^2", "y^2", "z^2"}, "published"));
  cases.push_back(roots_case("fermat-pair/roots/p3", 3, xyz, "x*y*z*(x^3+y^3+z^3)^2", 1,
                             {"x^2+2*x*y+y^2+2*x*z+2*y*z+z^2"}, "published"));
  cases.push_back(level_case("fermat-pair/p2", 2, xyz, "x*y*z", "x^3+y^3+z^3", K::finite, 2, 6, "published"));
  cases.push_back(level_case("fermat-pair/p3", 3, xyz, "x*y*z", "x^3+y^3+z^3", K::finite, 2, 6, "published"));
  cases.push_back(level_case("fermat-pair/x3/p5", 5, xyz, "x^3", "x^3+y^3+z^3", K::finite, 1, 6, "published"));

  cases.push_back(level_case("projective-line/y3/p5", 5, xy, "y^3", "x^3", K::finite, 2, 6, "published"));
  cases.push_back(level_case("projective-line/x2y/p5", 5, xy, "x^2*y", "x^3", K::finite, 1, 6, "published"));

  for (std::uint64_t p : {3, 5}) {
    auto sp = "/p" + std::to_string(p);
    cases.push_back(level_case("quadratic/y2-x2" + sp, p, xy, "y^2", "x^2", K::finite, 2, 6, "published"));
    cases.push_back(level_case("quadratic/xy-x2" + sp, p, xy, "x*y", "x^2", K::finite, 1, 6, "published"));
    cases.push_back(level_case("quadratic/y2-xy" + sp, p, xy, "y^2", "x*y", K::finite, 1, 6, "published"));
  }

  for (std::uint64_t p : {2, 3, 5}) {
    auto sp = "/p" + std::to_string(p);
    auto q = std::to_string(p + 1);
    std::string f = "x*y^" + q + "+y*z^" + q + "+z*w^" + q;
    bool slow = p == 5;
    cases.push_back(level_case("level4/pair" + sp, p, xyzw, "y", f, K::finite, 4, 5, "published", slow));
    cases.push_back(level_case("level4/denominator" + sp, p, xyzw, "1", f, K::finite, 2, 5, "published", slow));
  }

  for (std::uint64_t p : {2, 3}) {
    auto q = std::to_string(p + 1);
    cases.push_back(level_case("infinite/p" + std::to_string(p), p, xy, "x", "x^" + q + "+y^" + q, K::exceeds_bound, 5,
                               5, "published"));
  }

  for (std::uint64_t p : {7, 13})
    cases.push_back(level_case("fermat-cubic/p" + std::to_string(p), p, xyz, "1", "x^3+y^3+z^3", K::finite, 1, 6, "published"));
  for (std::uint64_t p : {2, 5, 11})
    cases.push_back(level_case("fermat-cubic/p" + std::to_string(p), p, xyz, "1", "x^3+y^3+z^3", K::finite, 2, 6, "published"));

  cases.push_back(curve_case("curve/x5+1/p13", 13, "x^5+1", {{{{0, 0}, {6, 0}}}, 0, false, false}, "published"));
  cases.push_back(curve_case("curve/x5+2/p13", 13, "x^5+2", {{{{0, 0}, {12, 0}}}, 0, false, false}, "published"));
  cases.push_back(curve_case("curve/x5+1/p19", 19, "x^5+1", {{{{0, 0}, {0, 0}}}, 0, false, true}, "published"));
  cases.push_back(curve_case("curve/x5+1/p11", 11, "x^5+1", {std::nullopt, 2, true, false}, "published"));
  cases.push_back(curve_case("curve/x8-1/p7", 7, "x^8-1", {std::nullopt, 0, false, std::nullopt}, "published"));
  cases.push_back(curve_case("curve/x8-1/p17", 17, "x^8-1", {std::nullopt, 3, true, false}, "published"));
  // The published p-ranks for p = 3 and p = 5 are swapped; these values
  // agree with a point-count oracle.
  cases.push_back(curve_case("curve/x8-1/p3", 3, "x^8-1", {std::nullopt, 2, false, std::nullopt}, "computed"));
  cases.push_back(curve_case("curve/x8-1/p5", 5, "x^8-1", {std::nullopt, 1, false, std::nullopt}, "computed"));
  return cases;
}

/// Runs the selected cases on a small thread pool; reports come back
/// sorted by case name. Exceptions are reported as failures.
inline std::vector<CaseReport> run_cases(const std::vector<RegressionCase>& all, const std::string& filter,
                                         bool include_long, unsigned threads = 0) {
  std::vector<const RegressionCase*> selected;
  for (const auto& c : all) {
    if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
    if (c.long_running && !include_long) continue;
    selected.push_back(&c);
  }
  std::vector<CaseReport> reports(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) {
      const auto& c = *selected[i];
      CaseReport& r = reports[i];
      r = {c.name, c.inputs, c.expected, c.provenance, c.long_running, false, {}, 0};
      auto t0 = std::chrono::steady_clock::now();
      try {
        auto res = c.run();
        r.passed = res.passed;
        r.observed = std::move(res.observed);
      } catch (const std::exception& ex) {
        r.observed = std::string("error: ") + ex.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  if (threads == 0) threads = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, selected.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(reports.begin(), reports.end(), [](const CaseReport& a, const CaseReport& b) { return a.name < b.name; });
  return reports;
}

} // namespace frobpair::regression

#endif // FROBPAIR_REGRESSION_HPP
