#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polygas/config.hpp"
#include "polygas/viscosity.hpp"

namespace polygas {

/// Shortest round-trip decimal form ("%.17g").
std::string format_number(double x);

struct TableCell {
  std::string column;
  double computed = 0.0;
  std::optional<double> reference;
  double tolerance = 0.0;
  bool pass = true;  // true when there is no reference
};

struct TableRow {
  std::string label;
  double alpha = 0.0;
  std::vector<TableCell> cells;
};

struct Table {
  std::string name;
  std::vector<TableRow> rows;
  bool all_pass() const;
};

struct TableTolerances {
  double gamma_star = 1e-3;     // table1
  double pr_root = 5e-4;        // table1
  double gamma_star_many = 0.05;  // table2
  double gamma = 1e-3;          // table3/4
  double pr = 1e-3;
  double rel_error_pp = 0.1;    // percentage points
};

/// Rebuilds table1..table4 from the gas configuration (see data/gases.cfg).
/// Throws Validation when a listed row lacks a required key.
std::vector<Table> reproduce_tables(const Config& cfg, const TableTolerances& tol = {});

void emit_tables_csv(std::ostream& out, const std::vector<Table>& tables);
void emit_tables_json(std::ostream& out, const std::vector<Table>& tables);

/// fig1: c_hat,I_hat,nu_hat for one (alpha, gamma).
void emit_fig1_csv(std::ostream& out, double alpha, double gamma, const std::vector<double>& c_hat,
                   const std::vector<double>& I_hat);
/// fig2: T_K,mu_Pa_s,mu_fit_Pa_s at the data temperatures.
void emit_fig2_csv(std::ostream& out, const ViscosityDataset& d, const FitResult& fit);
/// fig3: alpha,gamma,delta.
void emit_fig3_csv(std::ostream& out, const std::vector<double>& alphas, const std::vector<double>& gammas);

std::vector<double> default_fig3_alphas();
/// 600 points on (0, 6].
std::vector<double> default_fig3_gammas();

}  // namespace polygas
