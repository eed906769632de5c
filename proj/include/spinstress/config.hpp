#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace spinstress {

// Minimal reader for the TOML-style preset and scenario files: [section]
// headers, `key = value` lines, `#` comments. Values are strings, numbers
// or flat arrays of numbers; nothing more is needed by the file schemas.

class ConfigFile {
 public:
  static ConfigFile parse(std::istream& in);
  static ConfigFile parse_file(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  std::vector<std::string> sections() const;

  std::string get_string(const std::string& section, const std::string& key) const;
  double get_number(const std::string& section, const std::string& key) const;
  std::vector<double> get_array(const std::string& section, const std::string& key) const;

  std::string get_string_or(const std::string& section, const std::string& key,
                            const std::string& fallback) const;
  double get_number_or(const std::string& section, const std::string& key,
                       double fallback) const;

 private:
  // section -> key -> raw value text
  std::map<std::string, std::map<std::string, std::string>> data_;
  std::vector<std::string> section_order_;
};

}  // namespace spinstress
