#include "output.hpp"

#include <cmath>
#include <sstream>

namespace mapasym::cli {

#ifndef GENUS_ASYM_VERSION
#define GENUS_ASYM_VERSION "dev"
#endif

std::optional<Format> parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  return std::nullopt;
}

int decimal_digits(Precision prec) {
  return std::max(10, static_cast<int>(std::floor(static_cast<double>(prec.bits) * 0.30103)) - 3);
}

OutputValue real_output(std::string name, const Real& value, Provenance provenance) {
  OutputValue out{std::move(name), value.to_string(decimal_digits(value.precision())),
                  std::nullopt, std::string(to_string(provenance))};
  if (!value.is_zero()) out.log10 = log10(abs(value)).to_string(20);
  return out;
}

OutputValue count_output(std::string name, const LogMagnitude& value, Provenance provenance) {
  OutputValue out{std::move(name), value.to_scientific(10), std::nullopt,
                  std::string(to_string(provenance))};
  if (!value.is_zero()) out.log10 = value.log10_abs().to_string(20);
  return out;
}

OutputValue exact_output(std::string name, std::string value, Provenance provenance) {
  return OutputValue{std::move(name), std::move(value), std::nullopt,
                     std::string(to_string(provenance))};
}

nlohmann::ordered_json to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["inputs"] = record.inputs;
  nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
  for (const auto& v : record.outputs) {
    nlohmann::ordered_json o;
    o["name"] = v.name;
    o["value"] = v.value;
    if (v.log10) o["log10"] = *v.log10;
    o["provenance"] = v.provenance;
    if (v.conjectured) o["conjectured"] = true;
    outputs.push_back(std::move(o));
  }
  j["outputs"] = std::move(outputs);
  if (!record.notes.empty()) j["notes"] = record.notes;
  if (!record.details.is_null()) j["details"] = record.details;
  j["precision_bits"] = record.precision_bits;
  j["version"] = GENUS_ASYM_VERSION;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const OutputRecord& record, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson:
      os << to_json(record).dump(2) << '\n';
      break;
    case Format::kCsv:
      os << "name,value,log10,provenance\n";
      for (const auto& v : record.outputs) {
        os << csv_field(v.name) << ',' << csv_field(v.value) << ',' << v.log10.value_or("") << ','
           << v.provenance << (v.conjectured ? " (conjectured)" : "") << '\n';
      }
      break;
    case Format::kText: {
      std::size_t width = 0;
      for (const auto& v : record.outputs) width = std::max(width, v.name.size());
      for (const auto& v : record.outputs) {
        os << v.name << std::string(width - v.name.size() + 2, ' ') << v.value;
        if (v.log10) os << "  (log10 " << *v.log10 << ')';
        os << "  [" << v.provenance << (v.conjectured ? ", conjectured" : "") << "]\n";
      }
      for (const auto& n : record.notes) os << "note: " << n << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace mapasym::cli
