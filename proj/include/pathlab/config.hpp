#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathlab {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat key=value text with dotted sections ('#' comments, blank lines ok).
// Keys keep insertion-independent ordering: serialization is sorted, so
// parse/serialize round-trips are lossless and diffs are stable.
class KeyValues {
 public:
  static KeyValues parse_text(const std::string& text);
  static KeyValues parse_file(const std::string& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, std::optional<std::string> def = {}) const;
  double get_double(const std::string& key, std::optional<double> def = {}) const;
  long long get_int(const std::string& key, std::optional<long long> def = {}) const;
  std::uint64_t get_u64(const std::string& key, std::optional<std::uint64_t> def = {}) const;

  // keys read via get_* are tracked; anything else is unknown
  std::vector<std::string> untouched_keys() const;

  std::string serialize() const;  // sorted key=value lines, '\n' endings

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
  mutable std::map<std::string, bool> touched_;
};

std::string format_double_17(double v);  // shortest 17-significant-digit form

}  // namespace pathlab
