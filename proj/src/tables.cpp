#include "polygas/tables.hpp"

#include <cmath>
#include <cstdio>
#include "json.hpp"
#include <ostream>

#include "polygas/ensembles.hpp"
#include "polygas/errors.hpp"
#include "polygas/fourteen_moment.hpp"

namespace polygas {
namespace {

// printed values carry 3 decimals; keep comparisons inclusive
constexpr double kInclusive = 1e-12;

TableCell cell(std::string column, double computed, std::optional<double> reference, double tol) {
  TableCell c{std::move(column), computed, reference, tol, true};
  if (reference) c.pass = std::abs(computed - *reference) <= tol + kInclusive;
  return c;
}

std::optional<double> ref(const Config& cfg, const std::string& key) {
  if (!cfg.has(key)) return std::nullopt;
  return cfg.num(key);
}

Table gamma_star_table(const Config& cfg, const std::string& name, double gamma_tol, bool with_pr, double pr_tol) {
  Table t{name, {}};
  for (const auto& row : cfg.list(name + ".rows")) {
    const std::string pre = name + "." + row + ".";
    const double alpha = cfg.num(pre + "alpha");
    const double g = solve_gamma_star(alpha);
    TableRow r{row, alpha, {}};
    r.cells.push_back(cell("gamma", g, ref(cfg, pre + "gamma"), gamma_tol));
    if (with_pr) {
      r.cells.push_back(cell("Pr", prandtl_model(alpha, g), eucken_Pr(alpha), pr_tol));
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table s_table(const Config& cfg, const std::string& name, const TableTolerances& tol) {
  Table t{name, {}};
  for (const auto& row : cfg.list(name + ".rows")) {
    const std::string pre = name + "." + row + ".";
    const double alpha = cfg.num(pre + "alpha");
    const double s = cfg.num(pre + "s");
    const double g = s_to_gamma(s);
    const double pr = prandtl_model(alpha, g);
    const double pe = eucken_Pr(alpha);
    const double rel = 100.0 * std::abs(pr - pe) / pe;
    TableRow r{row, alpha, {}};
    r.cells.push_back(cell("s", s, std::nullopt, 0.0));
    r.cells.push_back(cell("gamma", g, ref(cfg, pre + "gamma"), tol.gamma));
    r.cells.push_back(cell("Pr", pr, ref(cfg, pre + "Pr"), tol.pr));
    r.cells.push_back(cell("Pr_eucken", pe, ref(cfg, pre + "Pr_eucken"), tol.pr));
    r.cells.push_back(cell("rel_error_pct", rel, ref(cfg, pre + "rel_error_pct"), tol.rel_error_pp));
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool Table::all_pass() const {
  for (const auto& r : rows)
    for (const auto& c : r.cells)
      if (!c.pass) return false;
  return true;
}

std::vector<Table> reproduce_tables(const Config& cfg, const TableTolerances& tol) {
  for (const char* t : {"table1", "table2", "table3", "table4"}) {
    if (!cfg.has(std::string(t) + ".rows")) fail(ErrorCode::Validation, std::string("missing gas config for ") + t);
  }
  std::vector<Table> out;
  out.push_back(gamma_star_table(cfg, "table1", tol.gamma_star, true, tol.pr_root));
  out.push_back(gamma_star_table(cfg, "table2", tol.gamma_star_many, false, 0.0));
  out.push_back(s_table(cfg, "table3", tol));
  out.push_back(s_table(cfg, "table4", tol));
  return out;
}

void emit_tables_csv(std::ostream& out, const std::vector<Table>& tables) {
  out << "table,row,alpha,column,computed,reference,tolerance,pass\n";
  for (const auto& t : tables)
    for (const auto& r : t.rows)
      for (const auto& c : r.cells) {
        out << t.name << ',' << r.label << ',' << format_number(r.alpha) << ',' << c.column << ','
            << format_number(c.computed) << ',' << (c.reference ? format_number(*c.reference) : "") << ','
            << (c.reference ? format_number(c.tolerance) : "") << ',' << (c.pass ? "pass" : "fail") << '\n';
      }
}

void emit_tables_json(std::ostream& out, const std::vector<Table>& tables) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["schema"] = 1;
  bool all = true;
  ordered_json jt = ordered_json::array();
  for (const auto& t : tables) {
    ordered_json tj;
    tj["name"] = t.name;
    tj["all_pass"] = t.all_pass();
    all = all && t.all_pass();
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json rj;
      rj["label"] = r.label;
      rj["alpha"] = r.alpha;
      ordered_json cells = ordered_json::array();
      for (const auto& c : r.cells) {
        ordered_json cj;
        cj["column"] = c.column;
        cj["computed"] = c.computed;
        cj["reference"] = c.reference ? ordered_json(*c.reference) : ordered_json(nullptr);
        cj["tolerance"] = c.reference ? ordered_json(c.tolerance) : ordered_json(nullptr);
        cj["pass"] = c.pass;
        cells.push_back(std::move(cj));
      }
      rj["cells"] = std::move(cells);
      rows.push_back(std::move(rj));
    }
    tj["rows"] = std::move(rows);
    jt.push_back(std::move(tj));
  }
  root["all_pass"] = all;
  root["tables"] = std::move(jt);
  out << root.dump(2) << '\n';
}

void emit_fig1_csv(std::ostream& out, double alpha, double gamma, const std::vector<double>& c_hat,
                   const std::vector<double>& I_hat) {
  out << "c_hat,I_hat,nu_hat\n";
  for (const auto& p : collision_frequency_grid(alpha, gamma, c_hat, I_hat)) {
    out << format_number(p.c_hat) << ',' << format_number(p.I_hat) << ',' << format_number(p.nu_hat) << '\n';
  }
}

void emit_fig2_csv(std::ostream& out, const ViscosityDataset& d, const FitResult& fit) {
  out << "T_K,mu_Pa_s,mu_fit_Pa_s\n";
  for (const auto& p : d.points) {
    out << format_number(p.T) << ',' << format_number(p.mu) << ',' << format_number(fit.A * std::pow(p.T, fit.s))
        << '\n';
  }
}

void emit_fig3_csv(std::ostream& out, const std::vector<double>& alphas, const std::vector<double>& gammas) {
  out << "alpha,gamma,delta\n";
  for (const auto& p : delta_scan(alphas, gammas)) {
    out << format_number(p.alpha) << ',' << format_number(p.gamma) << ',' << format_number(p.delta) << '\n';
  }
}

std::vector<double> default_fig3_alphas() { return {0.0, 0.5, 1.0, 2.0, 5.0}; }

std::vector<double> default_fig3_gammas() {
  std::vector<double> g(600);
  for (int i = 0; i < 600; ++i) g[i] = 0.01 * (i + 1);
  return g;
}

}  // namespace polygas
