#include "polygas/viscosity.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "polygas/errors.hpp"
#include "polygas/fourteen_moment.hpp"

namespace polygas {
namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& field, const std::string& where) {
  const std::string t = trim(field);
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (t.empty() || pos != t.size()) fail(ErrorCode::Parse, where + ": not a number: '" + t + "'");
  return v;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void ViscosityDataset::validate() const {
  if (points.size() < 3) fail(ErrorCode::Validation, "viscosity dataset needs at least 3 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].mu > 0.0)) fail(ErrorCode::Validation, "viscosity must be positive (point " + std::to_string(i + 1) + ")");
    if (!(points[i].T > 0.0)) fail(ErrorCode::Validation, "temperature must be positive (point " + std::to_string(i + 1) + ")");
    if (i > 0 && !(points[i].T > points[i - 1].T)) {
      fail(ErrorCode::Validation, "temperatures must be strictly increasing (point " + std::to_string(i + 1) + ")");
    }
  }
}

ViscosityDataset parse_viscosity_csv(std::istream& in, const std::string& origin) {
  ViscosityDataset d;
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      if (body.rfind("gas:", 0) == 0) d.gas = trim(body.substr(4));
      else if (body.rfind("source:", 0) == 0) d.source = trim(body.substr(7));
      continue;
    }
    if (!header) {
      if (t != "T_K,mu_Pa_s") fail(ErrorCode::Parse, where + ": expected header 'T_K,mu_Pa_s'");
      header = true;
      continue;
    }
    const auto comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
      fail(ErrorCode::Parse, where + ": expected two comma-separated fields");
    }
    d.points.push_back({parse_number(t.substr(0, comma), where), parse_number(t.substr(comma + 1), where)});
  }
  if (!header) fail(ErrorCode::Parse, origin + ": missing header 'T_K,mu_Pa_s'");
  d.validate();
  return d;
}

ViscosityDataset ingest_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  return parse_viscosity_csv(in, path);
}

void emit_csv(std::ostream& out, const ViscosityDataset& d) {
  if (!d.gas.empty()) out << "# gas: " << d.gas << '\n';
  if (!d.source.empty()) out << "# source: " << d.source << '\n';
  out << "T_K,mu_Pa_s\n";
  for (const auto& p : d.points) out << fmt17(p.T) << ',' << fmt17(p.mu) << '\n';
}

FitResult fit_power_law(const std::vector<ViscosityPoint>& points, double alpha) {
  const std::size_t n = points.size();
  if (n < 2) fail(ErrorCode::DegenerateFit, "need at least two points to fit");
  double mx = 0.0, my = 0.0;
  for (const auto& p : points) {
    if (!(p.T > 0.0) || !(p.mu > 0.0)) fail(ErrorCode::Validation, "fit requires T > 0 and mu > 0");
    mx += std::log(p.T);
    my += std::log(p.mu);
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(p.T) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(p.mu) - my);
  }
  if (!(sxx > 0.0)) fail(ErrorCode::DegenerateFit, "all temperatures are equal");

  FitResult r;
  r.n_points = n;
  r.s = sxy / sxx;
  const double logA = my - r.s * mx;
  r.A = std::exp(logA);
  double ss = 0.0;
  for (const auto& p : points) {
    const double e = std::log(p.mu) - (logA + r.s * std::log(p.T));
    ss += e * e;
  }
  r.residual_rms = std::sqrt(ss / double(n));
  r.Pr_eucken = eucken_Pr(alpha);
  if (r.s < 1.0) {
    r.gamma = s_to_gamma(r.s);
    r.Pr_model = prandtl_model(alpha, *r.gamma);
    r.rel_error = std::abs(*r.Pr_model - r.Pr_eucken) / r.Pr_eucken;
  }
  return r;
}

FitResult fit_power_law(const ViscosityDataset& d, double alpha) {
  d.validate();
  return fit_power_law(d.points, alpha);
}

void require_gamma(const FitResult& fit) {
  if (!fit.gamma) {
    fail(ErrorCode::ExponentOutOfRange, "fitted exponent s = " + fmt17(fit.s) + " >= 1; gamma is undefined");
  }
}

}  // namespace polygas
