#include "mrbound/tables.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mrbound/oracle.hpp"

namespace mrbound {

namespace {

long scale_inv_b(double inv_b) { return std::lround(inv_b * 1e6); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

MoleculeRegistry MoleculeRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("MoleculeRegistry: cannot open " + path);
  MoleculeRegistry reg;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    MoleculeSpec spec;
    if (!(ls >> spec.name >> spec.reduced_mass_amu)) continue;
    if (!(spec.reduced_mass_amu > 0.0))
      throw std::runtime_error("MoleculeRegistry: non-positive mass for " + spec.name);
    reg.add(spec);
  }
  return reg;
}

void MoleculeRegistry::add(const MoleculeSpec& spec) { by_name_[spec.name] = spec; }

const MoleculeSpec& MoleculeRegistry::get(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw std::out_of_range("MoleculeRegistry: unknown molecule " + name);
  return it->second;
}

ReferenceData ReferenceData::load(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("ReferenceData: cannot open " + csv_path);
  ReferenceData ref;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      saw_header = true;  // table,state,inv_b,column,value,excluded,reason
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() < 6) throw std::runtime_error("ReferenceData: malformed row: " + line);
    Key key{std::stoi(f[0]), f[1], scale_inv_b(std::stod(f[2])), f[3]};
    ReferenceCell cell{std::stod(f[4]), f[5] == "1", f.size() > 6 ? f[6] : ""};
    ref.cells_[key] = cell;
  }
  return ref;
}

std::optional<ReferenceCell> ReferenceData::find(int table, const std::string& state,
                                                 double inv_b,
                                                 const std::string& column) const {
  const auto it = cells_.find(Key{table, state, scale_inv_b(inv_b), column});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::pair<std::string, double>, ReferenceCell>>
ReferenceData::column(int table, const std::string& column) const {
  std::vector<std::pair<std::pair<std::string, double>, ReferenceCell>> out;
  for (const auto& [key, cell] : cells_)
    if (key.table == table && key.column == column)
      out.push_back({{key.state, key.inv_b_scaled / 1e6}, cell});
  return out;
}

double parse_A_rule(const std::string& rule, double b) {
  if (rule.rfind("A=", 0) != 0)
    throw std::invalid_argument("parse_A_rule: expected 'A=...', got " + rule);
  std::string body = rule.substr(2);
  if (!body.empty() && body.back() == 'b') {
    body.pop_back();
    const double factor = body.empty() ? 1.0 : std::stod(body);
    return factor * b;
  }
  return std::stod(body);
}

double convert_energy(double D, double b, const MoleculeSpec& molecule, UnitsMode mode,
                      double K_fitted) {
  if (mode == UnitsMode::Atomic) return D / (2.0 * b * b);
  const double K = (mode == UnitsMode::Physical) ? kKPhysical : K_fitted;
  if (!(K > 0.0))
    throw std::invalid_argument("convert_energy: calibrated mode needs a fitted K");
  if (!(molecule.reduced_mass_amu > 0.0))
    throw std::invalid_argument("convert_energy: molecule has no mass");
  return D * kHbarC * kHbarC / (2.0 * molecule.reduced_mass_amu * K * b * b);
}

CalibrationReport calibrate(const ReferenceData& ref, const MoleculeRegistry& reg) {
  // each eV cell of the molecular tables determines K directly:
  //   K = D (hbar c)^2 / (2 mu b^2 E_eV),  D the dimensionless eigenvalue
  struct TableCfg {
    int table;
    double alpha;
  };
  const TableCfg cfgs[] = {{3, 0.75}, {4, 0.75}, {5, 1.5}, {6, 1.5}};
  const CentrifugalScheme schemes[] = {CentrifugalScheme::Approx1,
                                       CentrifugalScheme::Approx2,
                                       CentrifugalScheme::Approx3};
  std::vector<double> fits;
  for (const auto& cfg : cfgs) {
    for (const auto& scheme : schemes) {
      const std::string suffix = std::string(".") + scheme_name(scheme);
      for (const std::string mol_name : {"CH", "CO", "HCl", "LiH"}) {
        if (!reg.contains(mol_name)) continue;
        const auto cells = ref.column(cfg.table, mol_name + suffix);
        const MoleculeSpec& mol = reg.get(mol_name);
        for (const auto& [sk, cell] : cells) {
          if (cell.excluded || !(cell.value < 0.0)) continue;
          const auto& [state, inv_b] = sk;
          const double b = 1.0 / inv_b;
          const QuantumNumbers qn = parse_state_label(state);
          PotentialParams params{2.0 * b, cfg.alpha, b};
          const EnergyResult er =
              energy_manning_rosen(qn, params, scheme, PhysicalConstants::atomic());
          const double D = eps_tilde(er.value, b, PhysicalConstants::atomic());
          fits.push_back(D * kHbarC * kHbarC /
                         (2.0 * mol.reduced_mass_amu * b * b * cell.value));
        }
      }
    }
  }
  if (fits.empty()) throw std::runtime_error("calibrate: no usable reference cells");
  std::sort(fits.begin(), fits.end());
  CalibrationReport rep;
  rep.cells_used = static_cast<int>(fits.size());
  const size_t mid = fits.size() / 2;
  rep.K_fitted = (fits.size() % 2) ? fits[mid] : 0.5 * (fits[mid - 1] + fits[mid]);
  rep.ratio = rep.K_physical / rep.K_fitted;
  return rep;
}

OutputTable build_table(const RunConfig& config, const MoleculeRegistry& registry,
                        const ReferenceData* ref, double K_fitted) {
  if (config.states.empty() || config.screenings.empty() || config.schemes.empty())
    throw std::invalid_argument(
        "build_table: states, screenings and schemes must all be nonempty");
  OutputTable table;
  MoleculeSpec mol;
  if (config.units != UnitsMode::Atomic) {
    if (config.molecule.empty())
      throw std::invalid_argument("build_table: eV output needs a molecule");
    mol = registry.get(config.molecule);
  }
  const PhysicalConstants atomic = PhysicalConstants::atomic();
  for (const auto& state : config.states) {
    const QuantumNumbers qn = parse_state_label(state);
    for (const double inv_b : config.screenings) {
      if (!(inv_b > 0.0))
        throw std::invalid_argument("build_table: screenings must be positive");
      const double b = 1.0 / inv_b;
      PotentialParams params{parse_A_rule(config.A_rule, b), config.alpha, b};
      for (const auto scheme : config.schemes) {
        double D;  // dimensionless eigenvalue
        if (scheme == CentrifugalScheme::Exact) {
          const EnergyResult guide =
              energy_manning_rosen(qn, params, CentrifugalScheme::Approx1, atomic);
          const OracleProblem prob =
              make_problem(params, qn.ell, CentrifugalScheme::Exact, atomic);
          const RadialGrid grid = RadialGrid::defaults(qn, b, config.oracle_grid);
          const ShootingResult sr =
              shoot_eigenvalue(prob, qn, 1.4 * guide.value, 0.6 * guide.value,
                               config.oracle_tol, grid);
          D = eps_tilde(sr.energy, b, atomic);
        } else {
          const EnergyResult er = energy_manning_rosen(qn, params, scheme, atomic);
          D = eps_tilde(er.value, b, atomic);
        }
        OutputCell cell;
        cell.state = state;
        cell.inv_b = inv_b;
        cell.scheme = scheme_name(scheme);
        cell.value = convert_energy(D, b, mol, config.units, K_fitted);
        if (ref && config.reference_table >= 1 && config.reference_table <= 6) {
          std::string column = scheme_name(scheme);
          if (scheme == CentrifugalScheme::Exact) column = "ls";
          if (config.reference_table >= 3) column = config.molecule + "." + column;
          if (const auto rc = ref->find(config.reference_table, state, inv_b, column)) {
            cell.paper_ref = rc->value;
            cell.deviation = cell.value - rc->value;
            if (rc->excluded) cell.excluded = rc->reason;
          }
        }
        table.cells.push_back(std::move(cell));
      }
    }
  }
  return table;
}

namespace {

std::string fmt9(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(9) << v;
  return os.str();
}

void emit_csv(const OutputTable& table, std::ostream& os) {
  os << "state,inv_b,scheme,value,paper_ref,deviation,excluded\n";
  for (const auto& c : table.cells) {
    os << c.state << ',' << fmt9(c.inv_b) << ',' << c.scheme << ',' << fmt9(c.value)
       << ',';
    if (c.paper_ref) os << fmt9(*c.paper_ref);
    os << ',';
    if (c.deviation) os << fmt9(*c.deviation);
    os << ',';
    if (c.excluded) os << *c.excluded;
    os << '\n';
  }
}

void emit_markdown(const OutputTable& table, std::ostream& os) {
  os << "| state | inv_b | scheme | value | paper_ref | deviation | excluded |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& c : table.cells) {
    os << "| " << c.state << " | " << fmt9(c.inv_b) << " | " << c.scheme << " | "
       << fmt9(c.value) << " | " << (c.paper_ref ? fmt9(*c.paper_ref) : "") << " | "
       << (c.deviation ? fmt9(*c.deviation) : "") << " | "
       << (c.excluded ? *c.excluded : "") << " |\n";
  }
}

void emit_json(const OutputTable& table, std::ostream& os) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& c : table.cells) {
    nlohmann::ordered_json row;
    row["state"] = c.state;
    row["inv_b"] = std::stod(fmt9(c.inv_b));
    row["scheme"] = c.scheme;
    row["value"] = std::stod(fmt9(c.value));
    row["paper_ref"] =
        c.paper_ref ? nlohmann::ordered_json(std::stod(fmt9(*c.paper_ref)))
                    : nlohmann::ordered_json(nullptr);
    row["deviation"] =
        c.deviation ? nlohmann::ordered_json(std::stod(fmt9(*c.deviation)))
                    : nlohmann::ordered_json(nullptr);
    row["excluded"] = c.excluded ? nlohmann::ordered_json(*c.excluded)
                                 : nlohmann::ordered_json(nullptr);
    rows.push_back(std::move(row));
  }
  os << rows.dump(2) << '\n';
}

}  // namespace

void emit(const OutputTable& table, OutputFormat format, std::ostream& os) {
  switch (format) {
    case OutputFormat::Csv:
      emit_csv(table, os);
      break;
    case OutputFormat::Markdown:
      emit_markdown(table, os);
      break;
    case OutputFormat::Json:
      emit_json(table, os);
      break;
  }
}

OutputTable parse_emitted_csv(std::istream& is) {
  OutputTable table;
  std::string line;
  if (!std::getline(is, line) ||
      line != "state,inv_b,scheme,value,paper_ref,deviation,excluded")
    throw std::runtime_error("parse_emitted_csv: missing or wrong header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    f.resize(7);
    OutputCell c;
    c.state = f[0];
    c.inv_b = std::stod(f[1]);
    c.scheme = f[2];
    c.value = std::stod(f[3]);
    if (!f[4].empty()) c.paper_ref = std::stod(f[4]);
    if (!f[5].empty()) c.deviation = std::stod(f[5]);
    if (!f[6].empty()) c.excluded = f[6];
    table.cells.push_back(std::move(c));
  }
  return table;
}

}  // namespace mrbound
