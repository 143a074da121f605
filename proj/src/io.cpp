#include "permsub/io.hpp"

#include <cstdio>
#include <ostream>

#include "permsub/errors.hpp"

namespace permsub {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), width_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_)
    throw invalid_input("csv row width " + std::to_string(cells.size()) +
                        " != " + std::to_string(width_));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(cells[i]);
  }
  out_ << "\r\n";
}

namespace {

std::string format_with(const char* fmt, int arg, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, arg, v);
  return buf;
}

} // namespace

std::string format_fixed(double v, int decimals) {
  return format_with("%.*f", decimals, v);
}

std::string format_sci(double v, int decimals) {
  return format_with("%.*e", decimals, v);
}

std::string format_general(double v, int significant) {
  return format_with("%.*g", significant, v);
}

void emit_json(std::ostream& out, nlohmann::json obj) {
  obj["schema_version"] = json_schema_version;
  out << obj.dump(2) << '\n';
}

} // namespace permsub
