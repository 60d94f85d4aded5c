#include "adflux/config.hpp"

#include <fstream>
#include <sstream>

#include "adflux/fluxes.hpp"

namespace adflux {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

KeyValueMap KeyValueMap::parse(const std::string& text, const std::string& origin) {
  KeyValueMap m;
  m.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    m.kv_[key] = value;
  }
  return m;
}

void KeyValueMap::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

bool KeyValueMap::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string KeyValueMap::get_string(const std::string& key,
                                    const std::string& fallback) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

std::string KeyValueMap::require_string(const std::string& key) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  if (it == kv_.end())
    throw ConfigError(origin_ + ": missing required key '" + key + "'");
  return it->second;
}

double KeyValueMap::get_double(const std::string& key, double fallback) {
  const auto v = get_optional_double(key);
  return v ? *v : fallback;
}

long KeyValueMap::get_long(const std::string& key, long fallback) {
  const auto v = get_optional_long(key);
  return v ? *v : fallback;
}

std::optional<double> KeyValueMap::get_optional_double(const std::string& key) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  if (it == kv_.end()) return std::nullopt;
  std::size_t pos = 0;
  const double v = std::stod(it->second, &pos);
  if (pos != it->second.size())
    throw ConfigError(origin_ + ": key '" + key + "' is not a number: '" +
                      it->second + "'");
  return v;
}

std::optional<long> KeyValueMap::get_optional_long(const std::string& key) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  if (it == kv_.end()) return std::nullopt;
  std::size_t pos = 0;
  const long v = std::stol(it->second, &pos);
  if (pos != it->second.size())
    throw ConfigError(origin_ + ": key '" + key + "' is not an integer: '" +
                      it->second + "'");
  return v;
}

std::vector<double> KeyValueMap::get_doubles(const std::string& key) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  std::vector<double> out;
  if (it == kv_.end()) return out;
  std::istringstream in(it->second);
  double v;
  while (in >> v) out.push_back(v);
  if (!in.eof())
    throw ConfigError(origin_ + ": key '" + key + "' has non-numeric entries");
  return out;
}

std::vector<std::string> KeyValueMap::get_words(const std::string& key) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  std::vector<std::string> out;
  if (it == kv_.end()) return out;
  std::istringstream in(it->second);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::map<std::string, std::string> KeyValueMap::take_prefixed(
    const std::string& prefix) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : kv_)
    if (k.rfind(prefix, 0) == 0) {
      out[k.substr(prefix.size())] = v;
      consumed_.insert(k);
    }
  return out;
}

void KeyValueMap::finalize() const {
  for (const auto& [k, v] : kv_)
    if (!consumed_.count(k))
      throw ConfigError(origin_ + ": unknown key '" + k + "'");
}

RunConfig parse_run_config(const std::string& text, const std::string& origin) {
  KeyValueMap kv = KeyValueMap::parse(text, origin);
  RunConfig rc;
  rc.case_name = kv.get_string("case", rc.case_name);
  rc.scheme = kv.get_string("scheme", rc.scheme);
  scheme_from_name(rc.scheme);  // validate early, error lists valid names
  if (kv.has("order")) rc.order = static_cast<int>(kv.get_long("order", 1));
  if (kv.has("cfl")) rc.cfl = kv.get_double("cfl", 0.8);
  rc.t_end = kv.get_optional_double("t_end");
  rc.max_iters = kv.get_optional_long("max_iters");
  if (rc.t_end && rc.max_iters)
    throw ConfigError(origin + ": conflicting stop rules (t_end and max_iters)");
  rc.limiter = kv.get_string("limiter", "");
  if (!rc.limiter.empty() && rc.limiter != "none" && rc.limiter != "van_leer")
    throw ConfigError(origin + ": unknown limiter '" + rc.limiter +
                      "'; valid: none van_leer");
  rc.output_dir = kv.get_string("output_dir", rc.output_dir);
  rc.snapshot_interval = kv.get_long("snapshot_interval", 0);
  rc.snapshot_format = kv.get_string("snapshot_format", rc.snapshot_format);
  if (rc.snapshot_format != "csv" && rc.snapshot_format != "vtk_legacy")
    throw ConfigError(origin + ": unknown snapshot format '" + rc.snapshot_format +
                      "'; valid: csv vtk_legacy");
  rc.seed = static_cast<unsigned>(kv.get_long("seed", 1));
  rc.floor_enabled = kv.get_long("floor", 0) != 0;
  for (const auto& [k, v] : kv.take_prefixed("override."))
    rc.case_overrides.emplace_back(k, v);
  kv.finalize();
  return rc;
}

RunConfig load_run_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), path);
}

}  // namespace adflux
