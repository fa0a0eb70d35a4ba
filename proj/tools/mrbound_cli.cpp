// Batch front end: table generation against the embedded reference data,
// single-state energies, wavefunction sampling, shooting oracle, K calibration.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "mrbound/aim.hpp"
#include "mrbound/oracle.hpp"
#include "mrbound/tables.hpp"
#include "mrbound/wavefn.hpp"

#ifndef MRBOUND_DATA_DIR
#define MRBOUND_DATA_DIR "data"
#endif

namespace {

using namespace mrbound;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConvergence = 2;
constexpr int kExitIo = 3;

UnitsMode parse_units(const std::string& s) {
  if (s == "atomic") return UnitsMode::Atomic;
  if (s == "physical") return UnitsMode::Physical;
  if (s == "paper-calibrated") return UnitsMode::PaperCalibrated;
  throw std::invalid_argument("unknown units mode: " + s);
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "markdown") return OutputFormat::Markdown;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + s);
}

CentrifugalScheme parse_scheme(const std::string& s) {
  if (s == "approx1") return CentrifugalScheme::Approx1;
  if (s == "approx2") return CentrifugalScheme::Approx2;
  if (s == "approx3") return CentrifugalScheme::Approx3;
  if (s == "exact") return CentrifugalScheme::Exact;
  throw std::invalid_argument("unknown scheme: " + s);
}

struct GlobalOpts {
  std::string units = "atomic";
  std::string format = "csv";
  std::string out;
  double tol = 1e-10;
  std::string data_dir = MRBOUND_DATA_DIR;
};

// writes through a file when --out given, else stdout
int with_sink(const GlobalOpts& g, const std::function<void(std::ostream&)>& fn) {
  if (g.out.empty()) {
    fn(std::cout);
    return kExitOk;
  }
  std::ofstream f(g.out);
  if (!f) {
    std::cerr << "error: cannot open " << g.out << " for writing\n";
    return kExitIo;
  }
  fn(f);
  if (!f) {
    std::cerr << "error: write to " << g.out << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

MoleculeRegistry load_registry(const GlobalOpts& g) {
  return MoleculeRegistry::load(g.data_dir + "/molecules.txt");
}

ReferenceData load_reference(const GlobalOpts& g) {
  return ReferenceData::load(g.data_dir + "/reference_tables.csv");
}

double fitted_K_if_needed(const GlobalOpts& g, UnitsMode mode) {
  if (mode != UnitsMode::PaperCalibrated) return 0.0;
  return calibrate(load_reference(g), load_registry(g)).K_fitted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of the exponential (Manning-Rosen type) potential"};
  app.require_subcommand(1);
  // let the global flags appear after the subcommand too
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--units", g.units, "atomic | physical | paper-calibrated")
      ->capture_default_str();
  app.add_option("--format", g.format, "csv | markdown | json")->capture_default_str();
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--tol", g.tol, "solver tolerance")->capture_default_str();
  app.add_option("--data-dir", g.data_dir, "directory with registry/reference data")
      ->capture_default_str();

  // table
  auto* t = app.add_subcommand("table", "generate an eigenvalue table");
  std::vector<std::string> t_states = {"2p", "3p", "3d", "4p", "4d", "4f",
                                       "5p", "5d", "5f", "5g", "6p", "6d",
                                       "6f", "6g"};
  std::vector<double> t_invb = {0.025, 0.05, 0.075};
  double t_alpha = 0.75;
  std::string t_arule = "A=2b";
  std::vector<std::string> t_schemes = {"approx1", "approx2", "approx3"};
  std::string t_mol;
  int t_ref = 0;
  t->add_option("--states", t_states, "spectroscopic labels")->capture_default_str();
  t->add_option("--inv-b", t_invb, "screening values 1/b")->capture_default_str();
  t->add_option("--alpha", t_alpha, "potential exponent parameter")
      ->capture_default_str();
  t->add_option("--A", t_arule, "A rule, e.g. A=2b or A=25")->capture_default_str();
  t->add_option("--schemes", t_schemes, "approx1|approx2|approx3|exact")
      ->capture_default_str();
  t->add_option("--molecule", t_mol, "molecule name for eV output");
  t->add_option("--reference-table", t_ref,
                "attach embedded reference table 1-6 (0 = none)")
      ->capture_default_str();

  // energy
  auto* e = app.add_subcommand("energy", "single bound-state energy");
  std::string e_state = "2p";
  double e_invb = 0.025, e_alpha = 0.75;
  std::string e_arule = "A=2b", e_scheme = "approx1", e_mol;
  e->add_option("--state", e_state, "spectroscopic label")->capture_default_str();
  e->add_option("--inv-b", e_invb, "screening 1/b")->capture_default_str();
  e->add_option("--alpha", e_alpha)->capture_default_str();
  e->add_option("--A", e_arule)->capture_default_str();
  e->add_option("--scheme", e_scheme, "approx1|approx2|approx3|exact")
      ->capture_default_str();
  e->add_option("--molecule", e_mol, "molecule name for eV output");

  // wavefunction
  auto* w = app.add_subcommand("wavefunction", "sample a normalized eigenfunction");
  std::string w_state = "2p";
  double w_invb = 0.025, w_alpha = 0.75, w_rmax = 0.0;
  std::string w_arule = "A=2b", w_scheme = "approx1";
  int w_samples = 200;
  w->add_option("--state", w_state)->capture_default_str();
  w->add_option("--inv-b", w_invb)->capture_default_str();
  w->add_option("--alpha", w_alpha)->capture_default_str();
  w->add_option("--A", w_arule)->capture_default_str();
  w->add_option("--scheme", w_scheme, "approx1|approx2|approx3")
      ->capture_default_str();
  w->add_option("--samples", w_samples, "number of radial samples")
      ->capture_default_str();
  w->add_option("--r-max", w_rmax, "outer radius (default b*max(40,20(n+l+1)))");

  // oracle
  auto* o = app.add_subcommand("oracle", "shooting-method eigenvalue");
  std::string o_state = "2p";
  double o_invb = 0.025, o_alpha = 0.75;
  std::string o_arule = "A=2b", o_scheme = "exact";
  int o_grid = 8000;
  o->add_option("--state", o_state)->capture_default_str();
  o->add_option("--inv-b", o_invb)->capture_default_str();
  o->add_option("--alpha", o_alpha)->capture_default_str();
  o->add_option("--A", o_arule)->capture_default_str();
  o->add_option("--scheme", o_scheme, "approx1|approx2|approx3|exact")
      ->capture_default_str();
  o->add_option("--grid", o_grid, "grid point count")->capture_default_str();

  // calibrate
  auto* c = app.add_subcommand("calibrate",
                               "fit the amu->energy constant from the reference data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    const UnitsMode units = parse_units(g.units);
    const OutputFormat format = parse_format(g.format);

    if (t->parsed()) {
      RunConfig cfg;
      cfg.states = t_states;
      cfg.screenings = t_invb;
      cfg.alpha = t_alpha;
      cfg.A_rule = t_arule;
      if (t_schemes.empty()) throw std::invalid_argument("table: empty scheme list");
      for (const auto& s : t_schemes) cfg.schemes.push_back(parse_scheme(s));
      cfg.units = units;
      cfg.molecule = t_mol;
      cfg.reference_table = t_ref;
      cfg.oracle_tol = g.tol;
      cfg.oracle_grid = o_grid;
      const MoleculeRegistry reg = load_registry(g);
      std::optional<ReferenceData> ref;
      if (t_ref >= 1 && t_ref <= 6) ref = load_reference(g);
      const double K = fitted_K_if_needed(g, units);
      const OutputTable table = build_table(cfg, reg, ref ? &*ref : nullptr, K);
      return with_sink(g, [&](std::ostream& os) { emit(table, format, os); });
    }

    if (e->parsed()) {
      RunConfig cfg;
      cfg.states = {e_state};
      cfg.screenings = {e_invb};
      cfg.alpha = e_alpha;
      cfg.A_rule = e_arule;
      cfg.schemes = {parse_scheme(e_scheme)};
      cfg.units = units;
      cfg.molecule = e_mol;
      cfg.oracle_tol = g.tol;
      const MoleculeRegistry reg = load_registry(g);
      const double K = fitted_K_if_needed(g, units);
      const OutputTable table = build_table(cfg, reg, nullptr, K);
      return with_sink(g, [&](std::ostream& os) { emit(table, format, os); });
    }

    if (w->parsed()) {
      const QuantumNumbers qn = parse_state_label(w_state);
      const double b = 1.0 / w_invb;
      const PotentialParams params{parse_A_rule(w_arule, b), w_alpha, b};
      const CentrifugalScheme scheme = parse_scheme(w_scheme);
      if (scheme == CentrifugalScheme::Exact)
        throw std::invalid_argument("wavefunction: closed-form schemes only");
      const double rmax = (w_rmax > 0.0) ? w_rmax : default_r_max(qn, b);
      if (w_samples < 2) throw std::invalid_argument("wavefunction: samples >= 2");
      const RadialWavefunction wf = normalize(
          radial_wavefunction(qn, params, scheme, PhysicalConstants::atomic()), rmax);
      return with_sink(g, [&](std::ostream& os) {
        os << "r,R\n";
        for (int i = 1; i <= w_samples; ++i) {
          const double r = rmax * i / w_samples;
          os << r << ',' << wf(r) << '\n';
        }
      });
    }

    if (o->parsed()) {
      const QuantumNumbers qn = parse_state_label(o_state);
      const double b = 1.0 / o_invb;
      const PotentialParams params{parse_A_rule(o_arule, b), o_alpha, b};
      const PhysicalConstants consts = PhysicalConstants::atomic();
      const EnergyResult guide =
          energy_manning_rosen(qn, params, CentrifugalScheme::Approx1, consts);
      const OracleProblem prob =
          make_problem(params, qn.ell, parse_scheme(o_scheme), consts);
      const RadialGrid grid = RadialGrid::defaults(qn, b, o_grid);
      const ShootingResult sr = shoot_eigenvalue(prob, qn, 1.4 * guide.value,
                                                 0.6 * guide.value, g.tol, grid);
      return with_sink(g, [&](std::ostream& os) {
        os << "energy " << std::setprecision(12) << sr.energy << "\nnodes "
           << sr.nodes << "\nmismatch " << sr.mismatch << "\niterations "
           << sr.iterations << '\n';
      });
    }

    if (c->parsed()) {
      const CalibrationReport rep = calibrate(load_reference(g), load_registry(g));
      return with_sink(g, [&](std::ostream& os) {
        os << std::setprecision(10) << "K_fitted " << rep.K_fitted << " eV/amu\n"
           << "K_physical " << rep.K_physical << " eV/amu\n"
           << "ratio_physical_over_fitted " << rep.ratio << '\n'
           << "cells_used " << rep.cells_used << '\n';
      });
    }
  } catch (const AimConvergenceError& err) {
    std::cerr << "error: " << err.what() << " (best k=" << err.best_k
              << ", residual=" << err.best_residual << ")\n";
    return kExitConvergence;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitValidation;
  } catch (const std::runtime_error& err) {
    const std::string what = err.what();
    if (what.find("cannot open") != std::string::npos)
      return (std::cerr << "error: " << what << '\n'), kExitIo;
    std::cerr << "error: " << what << '\n';
    return kExitConvergence;
  }
  return kExitOk;
}
