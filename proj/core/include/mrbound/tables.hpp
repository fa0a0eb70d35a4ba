#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mrbound/closedform.hpp"

namespace mrbound {

struct MoleculeSpec {
  std::string name;
  double reduced_mass_amu = 0.0;
};

// Plain-text registry, one "name mass_amu" per line, '#' comments.
class MoleculeRegistry {
 public:
  static MoleculeRegistry load(const std::string& path);
  void add(const MoleculeSpec& spec);
  const MoleculeSpec& get(const std::string& name) const;
  bool contains(const std::string& name) const { return by_name_.count(name) > 0; }
  size_t size() const { return by_name_.size(); }

 private:
  std::map<std::string, MoleculeSpec> by_name_;
};

enum class UnitsMode { Atomic, Physical, PaperCalibrated };

// amu -> energy conversion constants. The published eV tables do not follow
// the standard amu -> eV constant; the effective constant is fitted from the
// embedded reference data (see calibrate()).
constexpr double kKPhysical = 931.494e6;  // eV per amu
constexpr double kHbarC = 1973.29;        // eV Angstrom

// Reference cell from the embedded transcription of the published tables.
struct ReferenceCell {
  double value = 0.0;
  bool excluded = false;
  std::string reason;
};

class ReferenceData {
 public:
  static ReferenceData load(const std::string& csv_path);
  std::optional<ReferenceCell> find(int table, const std::string& state, double inv_b,
                                    const std::string& column) const;
  // all cells of one table column, keyed by (state, inv_b)
  std::vector<std::pair<std::pair<std::string, double>, ReferenceCell>> column(
      int table, const std::string& column) const;
  size_t size() const { return cells_.size(); }

 private:
  struct Key {
    int table;
    std::string state;
    long inv_b_scaled;  // inv_b * 1e6, exact for the table values
    std::string column;
    bool operator<(const Key& o) const {
      return std::tie(table, state, inv_b_scaled, column) <
             std::tie(o.table, o.state, o.inv_b_scaled, o.column);
    }
  };
  std::map<Key, ReferenceCell> cells_;
};

struct CalibrationReport {
  double K_fitted = 0.0;
  double K_physical = kKPhysical;
  double ratio = 0.0;  // physical / fitted
  int cells_used = 0;
};

// Fit the effective amu -> energy constant from the atomic-unit table and
// its eV counterpart (median over cells of one molecule's columns).
CalibrationReport calibrate(const ReferenceData& ref, const MoleculeRegistry& reg);

// Dimensionless bracket D = 2 mu E b^2 / hbar^2 to eV:
//   E_eV = D (hbar c)^2 / (2 mu_amu K b^2)
double convert_energy(double D, double b, const MoleculeSpec& molecule,
                      UnitsMode mode, double K_fitted = 0.0);

struct RunConfig {
  std::vector<std::string> states;
  std::vector<double> screenings;  // listed as 1/b
  double alpha = 0.75;
  std::string A_rule = "A=2b";
  std::vector<CentrifugalScheme> schemes;  // Exact means the shooting oracle
  UnitsMode units = UnitsMode::Atomic;
  std::string molecule;  // required for the eV modes
  int reference_table = 0;  // attach reference cells when in 1..6
  double oracle_tol = 1e-10;
  int oracle_grid = 8000;
};

struct OutputCell {
  std::string state;
  double inv_b = 0.0;
  std::string scheme;
  double value = 0.0;
  std::optional<double> paper_ref;
  std::optional<double> deviation;
  std::optional<std::string> excluded;
};

struct OutputTable {
  std::vector<OutputCell> cells;
};

OutputTable build_table(const RunConfig& config, const MoleculeRegistry& registry,
                        const ReferenceData* ref = nullptr, double K_fitted = 0.0);

enum class OutputFormat { Csv, Markdown, Json };

void emit(const OutputTable& table, OutputFormat format, std::ostream& os);

// Round trip helper for the CSV format.
OutputTable parse_emitted_csv(std::istream& is);

double parse_A_rule(const std::string& rule, double b);

}  // namespace mrbound
