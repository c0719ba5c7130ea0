#include "alfvac/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "alfvac/classical.hpp"
#include "alfvac/ladder.hpp"

namespace alfvac::verify {

namespace {

struct SuiteInfo {
  Suite suite;
  std::string_view name;
};

constexpr SuiteInfo kSuites[] = {
    {Suite::annihilation, "annihilation"},
    {Suite::nodes, "nodes"},
    {Suite::ode, "ode"},
    {Suite::orthonormality, "orthonormality"},
    {Suite::legendre_coincidence, "legendre-coincidence"},
    {Suite::classical_ratio, "classical-ratio"},
};

constexpr double kOdeTolerance = 1e-9;

CaseResult check_annihilation(const CaseId& id) {
  LadderALF g = ground(id.ell);
  // For l = 0 the operator reduces to sqrt(1-x^2) d/dx on a constant.
  bool zero = id.ell == 0 ? g.g.poly.derivative().is_zero() : apply_lowering_ground(id.ell, g.g).is_zero();
  return {id, zero, zero ? "annihilated" : "lowering left a nonzero function"};
}

CaseResult check_nodes(const CaseId& id) {
  int count = node_count(build(id.ell, id.nodes));
  return {id, count == id.nodes, std::to_string(count) + " interior zeros"};
}

CaseResult check_ode(const CaseId& id) {
  LadderALF f = build(id.ell, id.nodes);
  if (!ode_residual(f).is_zero()) return {id, false, "reduced residual polynomial is nonzero"};
  double worst = 0.0;
  for (int k = 1; k <= 11; ++k)
    worst = std::max(worst, std::fabs(ode_residual_numeric(id.ell, id.nodes, f.g, Rational(k - 6, 6))));
  bool ok = worst < kOdeTolerance;
  return {id, ok, "max sampled residual " + std::to_string(worst)};
}

// Integral of (P_l^m)^2: 2(l+m)! / ((2l+1)(l-m)!).
Rational classical_norm(int ell, int m) {
  const auto l = static_cast<unsigned>(ell), mm = static_cast<unsigned>(m);
  return Rational(2) * Rational::factorial(l + mm) / (Rational(2 * ell + 1) * Rational::factorial(l - mm));
}

CaseResult check_orthonormality(const CaseId& id) {
  const int m = id.ell - id.nodes;
  const int l1 = id.ell, l2 = id.partner;
  const bool same = l1 == l2;

  ModifiedALF f = modified(l1, m), g = modified(l2, m);
  Rational ip = hp_inner_product(f.g, g.g);
  bool classical_ok = same ? ip * ip == f.c_squared * g.c_squared : ip.is_zero();

  // The ladder functions carry the classical norm 2(l+m)!/((2l+1)(l-m)!),
  // so after that rescaling they obey the same identity.
  LadderALF a = build(l1, l1 - m), b = build(l2, l2 - m);
  Rational lip = hp_inner_product(a.g, b.g);
  bool ladder_ok = same ? lip == a.c_squared * classical_norm(l1, m) : lip.is_zero();
  bool ok = classical_ok && ladder_ok;
  std::string detail = same ? "unit norm" : "orthogonal";
  if (!classical_ok) detail = "modified ALFs violate the identity";
  if (!ladder_ok) detail += "; ladder functions violate the identity";
  return {id, ok, detail};
}

CaseResult check_legendre(const CaseId& id) {
  LadderALF top = build(id.ell, id.ell);
  Polynomial p = classical::legendre_poly(id.ell);
  bool squared = top.g.poly * top.g.poly == p * p * top.c_squared;
  auto normalized = top.normalized_poly();
  bool exact = normalized && *normalized == p;
  return {id, squared && exact, exact ? "equals P_l" : "differs from P_l"};
}

CaseResult check_classical_ratio(const CaseId& id) {
  try {
    ClassicalComparison c = compare_with_classical(id.ell, id.nodes);
    std::string detail = "ratio " + c.ratio.str() + ", c_squared " + c.c_squared.str() + ", sign " +
                         (c.sign > 0 ? "+1" : "-1");
    return {id, c.squared_match, detail};
  } catch (const std::logic_error& e) {
    return {id, false, e.what()};
  }
}

}  // namespace

std::string_view suite_name(Suite suite) {
  for (const auto& s : kSuites)
    if (s.suite == suite) return s.name;
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& s : kSuites)
    if (s.name == name) return s.suite;
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> v;
    for (const auto& s : kSuites) v.push_back(s.suite);
    return v;
  }();
  return suites;
}

std::string CaseId::check() const {
  switch (suite) {
    case Suite::annihilation: return "lowering annihilates ground";
    case Suite::nodes: return "interior zeros equal n_x";
    case Suite::ode: return "associated Legendre equation";
    case Suite::orthonormality: return "F_l^m . F_l'^m with l'=" + std::to_string(partner);
    case Suite::legendre_coincidence: return "P_l^l equals Legendre P_l";
    case Suite::classical_ratio: return "proportional to Rodrigues P_l^m";
  }
  return {};
}

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; }));
}

int RunReport::attempted() const {
  int n = 0;
  for (const auto& s : suites) n += s.attempted();
  return n;
}

int RunReport::passed() const {
  int n = 0;
  for (const auto& s : suites) n += s.passed();
  return n;
}

std::vector<CaseId> enumerate_cases(Suite suite, int lmax) {
  if (lmax < 0) throw std::invalid_argument("lmax must be non-negative");
  std::vector<CaseId> cases;
  switch (suite) {
    case Suite::annihilation:
    case Suite::legendre_coincidence:
      for (int l = 0; l <= lmax; ++l) cases.push_back({suite, l, suite == Suite::annihilation ? 0 : l});
      break;
    case Suite::nodes:
    case Suite::ode:
    case Suite::classical_ratio:
      for (int l = 0; l <= lmax; ++l)
        for (int n = 0; n <= l; ++n) cases.push_back({suite, l, n});
      break;
    case Suite::orthonormality:
      for (int l = 0; l <= lmax; ++l)
        for (int n = 0; n <= l; ++n)
          for (int l2 = l; l2 <= lmax; ++l2) cases.push_back({suite, l, n, l2});
      break;
  }
  std::sort(cases.begin(), cases.end());
  return cases;
}

CaseResult run_case(const CaseId& id) {
  try {
    switch (id.suite) {
      case Suite::annihilation: return check_annihilation(id);
      case Suite::nodes: return check_nodes(id);
      case Suite::ode: return check_ode(id);
      case Suite::orthonormality: return check_orthonormality(id);
      case Suite::legendre_coincidence: return check_legendre(id);
      case Suite::classical_ratio: return check_classical_ratio(id);
    }
  } catch (const std::exception& e) {
    return {id, false, std::string("exception: ") + e.what()};
  }
  return {id, false, "unknown suite"};
}

std::vector<CaseResult> run_cases_serial(std::span<const CaseId> cases) {
  std::vector<CaseResult> out;
  out.reserve(cases.size());
  for (const auto& id : cases) out.push_back(run_case(id));
  return out;
}

std::vector<CaseResult> run_cases_parallel(std::span<const CaseId> cases) {
  std::vector<CaseResult> out(cases.size());
  const long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_case(cases[static_cast<std::size_t>(i)]);
  return out;
}

RunReport run(std::span<const Suite> suites, int lmax, Execution execution) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Suite> ordered(suites.begin(), suites.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  RunReport report;
  report.name = "verify";
  report.lmax = lmax;
  for (Suite s : ordered) {
    auto cases = enumerate_cases(s, lmax);
    SuiteReport sr;
    sr.suite = s;
    sr.cases = execution == Execution::parallel ? run_cases_parallel(cases) : run_cases_serial(cases);
    report.suites.push_back(std::move(sr));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace alfvac::verify
