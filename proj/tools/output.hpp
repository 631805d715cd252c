#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapasym/log_magnitude.hpp"
#include "mapasym/map_constants.hpp"
#include "mapasym/real.hpp"

namespace mapasym::cli {

enum class Format { kJson, kCsv, kText };

std::optional<Format> parse_format(const std::string& name);

struct OutputValue {
  std::string name;
  std::string value;
  std::optional<std::string> log10;
  std::string provenance;
  bool conjectured = false;
};

/// Everything a command prints; rendered as JSON, CSV or text.
struct OutputRecord {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<OutputValue> outputs;
  std::vector<std::string> notes;
  /// Extra structured payload (tables, per-criterion reports); JSON only.
  nlohmann::ordered_json details;
  long precision_bits = 0;
};

/// Decimal digits that the precision supports, rounded down.
int decimal_digits(Precision prec);

OutputValue real_output(std::string name, const Real& value, Provenance provenance);
OutputValue count_output(std::string name, const LogMagnitude& value, Provenance provenance);
OutputValue exact_output(std::string name, std::string value, Provenance provenance);

nlohmann::ordered_json to_json(const OutputRecord& record);
std::string render(const OutputRecord& record, Format format);

}  // namespace mapasym::cli
