#include "cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace vfrac::cli {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

Record& Record::str(const std::string& key, std::string value) {
  fields_.push_back({key, Field::Kind::kStr, std::move(value), 0.0, 0, false});
  return *this;
}

Record& Record::num(const std::string& key, double value) {
  fields_.push_back({key, Field::Kind::kNum, {}, value, 0, false});
  return *this;
}

Record& Record::integer(const std::string& key, std::int64_t value) {
  fields_.push_back({key, Field::Kind::kInt, {}, 0.0, value, false});
  return *this;
}

Record& Record::boolean(const std::string& key, bool value) {
  fields_.push_back({key, Field::Kind::kBool, {}, 0.0, 0, value});
  return *this;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json_line(const Record& rec) {
  std::string out = "{";
  bool first = true;
  for (const Record::Field& f : rec.fields()) {
    if (!first) out += ",";
    first = false;
    out += "\"" + json_escape(f.key) + "\":";
    switch (f.kind) {
      case Record::Field::Kind::kStr:
        out += "\"" + json_escape(f.s) + "\"";
        break;
      case Record::Field::Kind::kNum:
        out += std::isfinite(f.d) ? format_double(f.d) : "null";
        break;
      case Record::Field::Kind::kInt:
        out += std::to_string(f.i);
        break;
      case Record::Field::Kind::kBool:
        out += f.b ? "true" : "false";
        break;
    }
  }
  out += "}";
  return out;
}

std::string to_csv_header(const Record& rec) {
  std::string out;
  bool first = true;
  for (const Record::Field& f : rec.fields()) {
    if (!first) out += ",";
    first = false;
    out += csv_escape(f.key);
  }
  return out;
}

std::string to_csv_row(const Record& rec) {
  std::string out;
  bool first = true;
  for (const Record::Field& f : rec.fields()) {
    if (!first) out += ",";
    first = false;
    switch (f.kind) {
      case Record::Field::Kind::kStr:
        out += csv_escape(f.s);
        break;
      case Record::Field::Kind::kNum:
        if (std::isfinite(f.d)) out += format_double(f.d);
        break;
      case Record::Field::Kind::kInt:
        out += std::to_string(f.i);
        break;
      case Record::Field::Kind::kBool:
        out += f.b ? "true" : "false";
        break;
    }
  }
  return out;
}

void emit(const std::vector<Record>& records, const std::string& format,
          std::ostream& out) {
  if (records.empty()) return;
  if (format == "csv") {
    out << to_csv_header(records.front()) << "\n";
    for (const Record& r : records) out << to_csv_row(r) << "\n";
  } else {
    for (const Record& r : records) out << to_json_line(r) << "\n";
  }
}

}  // namespace vfrac::cli
