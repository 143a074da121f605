#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace permsub {

// RFC 4180: CRLF row endings, one header row, quoting only where needed.
class CsvWriter {
public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);

private:
  std::ostream& out_;
  std::size_t width_;
};

std::string csv_escape(const std::string& field);

// Locale-independent numeric formatting (snprintf, C locale semantics).
std::string format_fixed(double v, int decimals);
std::string format_sci(double v, int decimals);
std::string format_general(double v, int significant);

// Emits obj as a single JSON object with "schema_version" injected,
// sorted keys, two-space indent and a trailing newline.
void emit_json(std::ostream& out, nlohmann::json obj);

inline constexpr int json_schema_version = 1;

} // namespace permsub
