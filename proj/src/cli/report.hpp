#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace vfrac::cli {

// One output record: ordered key/value pairs. JSON emission preserves the
// insertion order (one object per line); CSV takes its header from the first
// record of a run. Floats print with 17 significant digits so values
// round-trip exactly; non-finite floats serialize as null / empty.
class Record {
 public:
  Record& str(const std::string& key, std::string value);
  Record& num(const std::string& key, double value);
  Record& integer(const std::string& key, std::int64_t value);
  Record& boolean(const std::string& key, bool value);

  struct Field {
    enum class Kind { kStr, kNum, kInt, kBool };
    std::string key;
    Kind kind;
    std::string s;
    double d = 0.0;
    std::int64_t i = 0;
    bool b = false;
  };

  const std::vector<Field>& fields() const { return fields_; }

 private:
  std::vector<Field> fields_;
};

std::string format_double(double v);

std::string to_json_line(const Record& rec);
std::string to_csv_header(const Record& rec);
std::string to_csv_row(const Record& rec);

// format is "json" (NDJSON) or "csv" (header + rows).
void emit(const std::vector<Record>& records, const std::string& format,
          std::ostream& out);

}  // namespace vfrac::cli
