#include "pathlab/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pathlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

KeyValues KeyValues::parse_text(const std::string& text) {
  KeyValues kv;
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
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    }
    if (kv.entries_.count(key)) {
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    kv.entries_[key] = value;
  }
  return kv;
}

KeyValues KeyValues::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

void KeyValues::set(const std::string& key, const std::string& value) { entries_[key] = value; }

bool KeyValues::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string KeyValues::get_string(const std::string& key, std::optional<std::string> def) const {
  touched_[key] = true;
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  if (def) return *def;
  throw ConfigError("missing required key '" + key + "'");
}

double KeyValues::get_double(const std::string& key, std::optional<double> def) const {
  touched_[key] = true;
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (def) return *def;
    throw ConfigError("missing required key '" + key + "'");
  }
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse '" + it->second + "' as a number");
  }
}

long long KeyValues::get_int(const std::string& key, std::optional<long long> def) const {
  touched_[key] = true;
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (def) return *def;
    throw ConfigError("missing required key '" + key + "'");
  }
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse '" + it->second + "' as an integer");
  }
}

std::uint64_t KeyValues::get_u64(const std::string& key, std::optional<std::uint64_t> def) const {
  touched_[key] = true;
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (def) return *def;
    throw ConfigError("missing required key '" + key + "'");
  }
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse '" + it->second + "' as an unsigned integer");
  }
}

std::vector<std::string> KeyValues::untouched_keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) {
    if (!touched_.count(k)) out.push_back(k);
  }
  return out;
}

std::string KeyValues::serialize() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

std::string format_double_17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace pathlab
