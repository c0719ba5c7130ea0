// alfvac: build associated Legendre functions from their nodeless ground
// members, verify the construction, emit figure data and evaluate the
// electrostatics applications.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alfvac/classical.hpp"
#include "alfvac/electrostatics.hpp"
#include "alfvac/figure.hpp"
#include "alfvac/ladder.hpp"
#include "alfvac/source_file.hpp"
#include "alfvac/verify.hpp"

namespace es = alfvac::electrostatics;
using alfvac::figure::format_real;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string format = "text";
  bool dimensionless = false;

  bool json() const { return format == "json"; }
  es::Constants constants() const { return dimensionless ? es::Constants::dimensionless() : es::Constants::si(); }
};

std::vector<std::string> coefficient_strings(const alfvac::Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

ordered_json vec_json(const es::Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

std::string vec_text(const es::Vec3& v) {
  return "(" + format_real(v.x) + ", " + format_real(v.y) + ", " + format_real(v.z) + ")";
}

int cmd_build(const GlobalOptions& g, int ell, int n_x) {
  alfvac::LadderALF f = alfvac::build(ell, n_x);
  auto normalized = f.normalized_poly();
  auto rel = alfvac::compare_with_classical(ell, n_x);
  if (g.json()) {
    ordered_json j;
    j["ell"] = ell;
    j["n_x"] = n_x;
    j["m"] = f.order();
    j["poly"] = coefficient_strings(f.g.poly);
    j["poly_text"] = f.g.poly.str();
    j["half_power"] = f.g.half_power;
    j["c_squared"] = f.c_squared.str();
    std::vector<std::string> constants;
    for (const auto& c : f.constants) constants.push_back(c.str());
    j["norm_constants"] = constants;
    if (normalized) {
      j["normalized"] = coefficient_strings(*normalized);
      j["normalized_text"] = normalized->str();
    } else {
      j["normalized"] = nullptr;
    }
    j["classical_ratio"] = rel.ratio.str();
    j["classical_sign"] = rel.sign;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "ell: " << ell << "\nn_x: " << n_x << "\nm: " << f.order() << "\npoly: " << f.g.poly.str()
            << "\nhalf_power: " << f.g.half_power << "\nc_squared: " << f.c_squared.str() << "\nnorm_constants:";
  for (const auto& c : f.constants) std::cout << ' ' << c.str();
  std::cout << '\n';
  if (normalized) std::cout << "normalized: " << normalized->str() << '\n';
  std::cout << "classical: " << (rel.sign > 0 ? "+1" : "-1") << " x P_" << ell << "^" << f.order() << '\n';
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, int lmax, const std::vector<std::string>& names, bool serial, bool timing) {
  std::vector<alfvac::verify::Suite> suites;
  for (const auto& n : names) {
    auto s = alfvac::verify::parse_suite(n);
    if (!s) {
      std::cerr << "error: unknown suite '" << n << "'\n";
      return kExitUsage;
    }
    suites.push_back(*s);
  }
  if (suites.empty()) suites = alfvac::verify::all_suites();
  auto report = alfvac::verify::run(suites, lmax, serial ? es::Execution::serial : es::Execution::parallel);

  if (g.json()) {
    ordered_json j;
    j["name"] = report.name;
    j["lmax"] = report.lmax;
    j["attempted"] = report.attempted();
    j["passed"] = report.passed();
    j["suites"] = ordered_json::array();
    for (const auto& s : report.suites) {
      ordered_json sj;
      sj["suite"] = std::string(alfvac::verify::suite_name(s.suite));
      sj["attempted"] = s.attempted();
      sj["passed"] = s.passed();
      sj["cases"] = ordered_json::array();
      for (const auto& c : s.cases) {
        ordered_json cj;
        cj["ell"] = c.id.ell;
        cj["n_x"] = c.id.nodes;
        if (c.id.partner >= 0) cj["ell_partner"] = c.id.partner;
        cj["check"] = c.id.check();
        cj["passed"] = c.passed;
        cj["detail"] = c.detail;
        sj["cases"].push_back(std::move(cj));
      }
      j["suites"].push_back(std::move(sj));
    }
    if (timing) j["seconds"] = report.seconds;
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& s : report.suites) {
      std::cout << alfvac::verify::suite_name(s.suite) << ": " << s.passed() << "/" << s.attempted()
                << " passed\n";
      for (const auto& c : s.cases)
        if (!c.passed)
          std::cout << "  FAIL ell=" << c.id.ell << " n_x=" << c.id.nodes << " " << c.id.check() << ": "
                    << c.detail << '\n';
    }
    std::cout << "total: " << report.passed() << "/" << report.attempted() << " passed\n";
    if (timing) std::cout << "seconds: " << report.seconds << '\n';
  }
  return report.all_passed() ? kExitOk : kExitFailed;
}

int cmd_figure(const std::string& panel_name, int samples) {
  auto panel = alfvac::figure::parse_panel(panel_name);
  if (!panel) {
    std::cerr << "error: unknown panel '" << panel_name << "' (oscillator, mode-0 .. mode-4)\n";
    return kExitUsage;
  }
  std::cout << alfvac::figure::to_csv(alfvac::figure::sample_panel(*panel, samples));
  return kExitOk;
}

int cmd_multipole(const GlobalOptions& g, const std::string& path, double r, double theta, double phi, int lmax,
                  int quad, const std::string& legendre) {
  alfvac::SourceDescription sources = alfvac::read_sources(path);
  es::ExpansionOptions options;
  options.constants = g.constants();
  options.source = legendre == "classical" ? es::LegendreSource::classical : es::LegendreSource::ladder;
  es::FieldPoint p(r, theta, phi);

  ordered_json j;
  j["lmax"] = lmax;
  j["point"] = {{"r", r}, {"theta", theta}, {"phi", phi}};
  j["units"] = g.dimensionless ? "dimensionless" : "si";
  std::string text;

  if (!sources.charges.empty()) {
    es::ChargeSystem sys(sources.charges);
    auto expansion = es::multipole_scalar(sys, p, lmax, options);
    double oracle = es::direct_coulomb(sys, p, options);
    double err = es::relative_error(expansion.value, oracle);
    ordered_json cj;
    cj["count"] = sys.charges().size();
    cj["extent"] = sys.extent();
    cj["value"] = expansion.value;
    cj["table"] = expansion.table.terms;
    cj["oracle"] = oracle;
    cj["relative_error"] = err;
    j["charges"] = std::move(cj);
    text += "scalar potential: " + format_real(expansion.value) + "\ndirect coulomb: " + format_real(oracle) +
            "\nrelative error: " + format_real(err) + "\n";
    for (int l = 0; l <= lmax; ++l)
      text += "  c_" + std::to_string(l) + " = " + format_real(expansion.table.terms[l]) + "\n";
  }
  if (!sources.loops.empty()) {
    es::VectorExpansion total;
    total.lmax = lmax;
    total.terms.assign(static_cast<std::size_t>(lmax) + 1, {});
    es::Vec3 oracle;
    for (const auto& loop : sources.loops) {
      auto e = es::multipole_vector_loop(loop, p, lmax, quad, options);
      total.value += e.value;
      for (int l = 0; l <= lmax; ++l) total.terms[l] += e.terms[l];
      oracle += es::loop_reference(loop, p, quad, options);
    }
    const es::Vec3 phi_hat = p.phi_hat();
    double a_phi = dot(total.value, phi_hat);
    double oracle_phi = dot(oracle, phi_hat);
    double err = es::relative_error(total.value, oracle);
    ordered_json lj;
    lj["count"] = sources.loops.size();
    lj["quad_points"] = quad;
    lj["value"] = vec_json(total.value);
    lj["a_phi"] = a_phi;
    lj["table"] = ordered_json::array();
    for (const auto& t : total.terms) lj["table"].push_back(vec_json(t));
    lj["oracle"] = vec_json(oracle);
    lj["oracle_a_phi"] = oracle_phi;
    lj["relative_error"] = err;
    j["loops"] = std::move(lj);
    text += "vector potential: " + vec_text(total.value) + "\nA_phi: " + format_real(a_phi) +
            "\nloop reference: " + vec_text(oracle) + "\nrelative error: " + format_real(err) + "\n";
  }
  if (g.json())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
  return kExitOk;
}

int cmd_sphere(const GlobalOptions& g, double Q, double R, double E0, double r, double theta) {
  es::Constants c = g.constants();
  es::FieldPoint p(r, theta);
  double phi = es::sphere_potential(Q, R, E0, p, c);
  double coulomb = c.coulomb * Q / r;
  if (g.json()) {
    ordered_json j;
    j["potential"] = phi;
    j["coulomb_term"] = coulomb;
    j["field_terms"] = phi - coulomb;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "potential: " << format_real(phi) << "\ncoulomb term: " << format_real(coulomb) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated Legendre functions from ladder operators"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--dimensionless", g.dimensionless, "Use k_c = mu0/(4 pi) = 1");

  int ell = 0, n_x = 0;
  auto* build = app.add_subcommand("build", "Build P_l^{n_x} from the ground function");
  build->add_option("--ell", ell, "Degree l")->required();
  build->add_option("--nx", n_x, "Node number n_x")->required();

  int lmax = 10;
  std::vector<std::string> suites;
  bool serial = false, timing = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--lmax", lmax, "Largest degree")->check(CLI::NonNegativeNumber);
  verify->add_option("--suite", suites,
                     "annihilation, nodes, ode, orthonormality, legendre-coincidence, classical-ratio");
  verify->add_flag("--serial", serial, "Run cases on one thread");
  verify->add_flag("--timing", timing, "Report wall-clock time");

  std::string panel;
  int samples = 201;
  auto* figure = app.add_subcommand("figure", "Emit node-structure figure data as CSV");
  figure->add_option("--panel", panel, "oscillator or mode-0 .. mode-4")->required();
  figure->add_option("--samples", samples, "Grid points including endpoints");

  std::string source;
  double r = 0, theta = 0, phi = 0;
  int mlmax = 20, quad = es::kDefaultQuadPoints;
  std::string legendre = "ladder";
  auto* multipole = app.add_subcommand("multipole", "Evaluate truncated multipole expansions of a source file");
  multipole->add_option("--source", source, "Source description file")->required();
  multipole->add_option("--r", r, "Radial distance")->required();
  multipole->add_option("--theta", theta, "Polar angle (radians)")->required();
  multipole->add_option("--phi", phi, "Azimuthal angle (radians)");
  multipole->add_option("--lmax", mlmax, "Truncation degree");
  multipole->add_option("--quad", quad, "Loop quadrature points");
  multipole->add_option("--legendre", legendre, "Legendre factors from ladder or classical")
      ->check(CLI::IsMember({"ladder", "classical"}));

  double Q = 0, R = 1, E0 = 0, sr = 1, stheta = 0;
  auto* sphere = app.add_subcommand("sphere", "Potential of a charged conducting sphere in a uniform field");
  sphere->add_option("--Q", Q, "Charge")->required();
  sphere->add_option("--R", R, "Sphere radius")->required();
  sphere->add_option("--E0", E0, "External field")->required();
  sphere->add_option("--r", sr, "Radial distance")->required();
  sphere->add_option("--theta", stheta, "Polar angle (radians)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(g, ell, n_x);
    if (verify->parsed()) return cmd_verify(g, lmax, suites, serial, timing);
    if (figure->parsed()) return cmd_figure(panel, samples);
    if (multipole->parsed()) return cmd_multipole(g, source, r, theta, phi, mlmax, quad, legendre);
    if (sphere->parsed()) return cmd_sphere(g, Q, R, E0, sr, stheta);
  } catch (const alfvac::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
