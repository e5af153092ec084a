#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace polygas {

/// Flat key = value configuration; '#' starts a comment line.
class Config {
 public:
  static Config load(const std::string& path);
  static Config parse(std::istream& in, const std::string& origin = "<stream>");

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& str(const std::string& key) const;
  double num(const std::string& key) const;
  double num_or(const std::string& key, double fallback) const;
  /// Comma-separated list.
  std::vector<std::string> list(const std::string& key) const;
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }

 private:
  std::map<std::string, std::string> values_;
};

/// Directory of the shipped data files (compile-time default, overridable by POLYGAS_DATA_DIR).
std::string default_data_dir();

}  // namespace polygas
