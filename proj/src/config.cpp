#include "polygas/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "polygas/errors.hpp"

namespace polygas {
namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open config file " + path);
  return parse(in, path);
}

Config Config::parse(std::istream& in, const std::string& origin) {
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::Parse, origin + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) fail(ErrorCode::Parse, origin + ":" + std::to_string(lineno) + ": empty key");
    c.values_[key] = trim(t.substr(eq + 1));
  }
  return c;
}

const std::string& Config::str(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) fail(ErrorCode::Validation, "missing config key '" + key + "'");
  return it->second;
}

double Config::num(const std::string& key) const {
  const std::string& s = str(key);
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) fail(ErrorCode::Parse, "config key '" + key + "': not a number: " + s);
  return v;
}

double Config::num_or(const std::string& key, double fallback) const { return has(key) ? num(key) : fallback; }

std::vector<std::string> Config::list(const std::string& key) const {
  std::vector<std::string> out;
  std::stringstream ss(str(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("POLYGAS_DATA_DIR")) return env;
#ifdef POLYGAS_DATA_DIR
  return POLYGAS_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace polygas
