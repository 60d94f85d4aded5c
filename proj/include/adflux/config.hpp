#ifndef ADFLUX_CONFIG_HPP
#define ADFLUX_CONFIG_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace adflux {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Flat "key = value" text with '#' comments. Consumers mark keys as they
/// read them; finalize() rejects anything left over, so misspelled keys are
/// errors rather than silently ignored settings.
class KeyValueMap {
public:
  static KeyValueMap parse(const std::string& text, const std::string& origin);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback);
  std::string require_string(const std::string& key);
  double get_double(const std::string& key, double fallback);
  long get_long(const std::string& key, long fallback);
  std::optional<double> get_optional_double(const std::string& key);
  std::optional<long> get_optional_long(const std::string& key);
  /// Whitespace-separated doubles, e.g. a primitive 4-vector.
  std::vector<double> get_doubles(const std::string& key);
  std::vector<std::string> get_words(const std::string& key);

  /// All keys with the given prefix (marks them consumed).
  std::map<std::string, std::string> take_prefixed(const std::string& prefix);

  void finalize() const;  // throws on unconsumed keys
  const std::string& origin() const { return origin_; }

private:
  std::map<std::string, std::string> kv_;
  mutable std::set<std::string> consumed_;
  std::string origin_;
};

/// Top-level run configuration for the CLI `run` subcommand.
struct RunConfig {
  std::string case_name = "sod";
  std::vector<std::pair<std::string, std::string>> case_overrides;
  std::string scheme = "hllem_fp";
  std::optional<int> order;       // overrides the case preset
  std::optional<double> cfl;      // overrides the case preset
  std::optional<double> t_end;
  std::optional<long> max_iters;
  std::string limiter;            // "", "none" or "van_leer"
  std::string output_dir = "out";
  long snapshot_interval = 0;     // 0 = final snapshot only
  std::string snapshot_format = "csv";  // csv | vtk_legacy
  unsigned seed = 1;
  bool floor_enabled = false;
};

RunConfig parse_run_config(const std::string& text, const std::string& origin);
RunConfig load_run_config_file(const std::string& path);

}  // namespace adflux

#endif
