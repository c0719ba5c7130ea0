#ifndef ALFVAC_VERIFY_HPP
#define ALFVAC_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alfvac/electrostatics.hpp"

namespace alfvac::verify {

using electrostatics::Execution;

enum class Suite { annihilation, nodes, ode, orthonormality, legendre_coincidence, classical_ratio };

std::string_view suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

/// One check. `partner` is the second degree l' of an orthonormality pair
/// (-1 elsewhere); for that suite `nodes` is l - m of the first function.
struct CaseId {
  Suite suite = Suite::nodes;
  int ell = 0;
  int nodes = 0;
  int partner = -1;

  std::string check() const;
  friend auto operator<=>(const CaseId&, const CaseId&) = default;
};

struct CaseResult {
  CaseId id;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  Suite suite = Suite::nodes;
  std::vector<CaseResult> cases;

  int attempted() const { return static_cast<int>(cases.size()); }
  int passed() const;
};

struct RunReport {
  std::string name;
  int lmax = 0;
  std::vector<SuiteReport> suites;
  double seconds = 0;

  int attempted() const;
  int passed() const;
  bool all_passed() const { return passed() == attempted(); }
};

/// Every case of a suite for degrees 0..lmax, in (ell, nodes, partner) order.
std::vector<CaseId> enumerate_cases(Suite suite, int lmax);

CaseResult run_case(const CaseId& id);

/// Reference path: one case after another.
std::vector<CaseResult> run_cases_serial(std::span<const CaseId> cases);
/// OpenMP path; results come back in input order.
std::vector<CaseResult> run_cases_parallel(std::span<const CaseId> cases);

RunReport run(std::span<const Suite> suites, int lmax, Execution execution = Execution::parallel);

}  // namespace alfvac::verify

#endif
