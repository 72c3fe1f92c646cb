#include "shc/lab.hpp"

#include "shc/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace shc::lab {
namespace {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string stem(const ExperimentResult& result) {
  return result.config.output.empty() ? std::string(to_string(result.config.experiment))
                                      : result.config.output;
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << "t,computed,reference,ratio,error_bound,method\n";
  for (const auto& row : result.rows) {
    out << number(row.t) << ',' << number(row.computed) << ',' << number(row.reference)
        << ',' << number(row.ratio) << ',' << number(row.error_bound) << ',' << row.method
        << '\n';
  }
}

void write_json(std::ostream& out, const ExperimentResult& result) {
  nlohmann::json doc;
  doc["experiment"] = std::string(to_string(result.config.experiment));
  doc["config"] = result.config.entries;
  doc["seed"] = result.config.seed;

  auto& rows = doc["rows"] = nlohmann::json::array();
  for (const auto& row : result.rows) {
    rows.push_back({{"t", json_number(row.t)},
                    {"computed", json_number(row.computed)},
                    {"reference", json_number(row.reference)},
                    {"ratio", json_number(row.ratio)},
                    {"error_bound", json_number(row.error_bound)},
                    {"method", row.method}});
  }

  auto& summary = doc["summary"] = nlohmann::json::object();
  if (const auto& fit = result.summary.fit) {
    summary["slope"] = json_number(fit->slope);
    summary["intercept"] = json_number(fit->intercept);
    summary["r_squared"] = json_number(fit->r_squared);
    summary["slope_std_error"] = json_number(fit->slope_std_error);
    summary["fit_points"] = fit->points;
    summary["low_confidence"] = fit->low_confidence;
  }
  if (result.summary.expected_slope) {
    summary["expected_slope"] = json_number(*result.summary.expected_slope);
  }
  for (const auto& [key, value] : result.summary.metrics) {
    summary[key] = json_number(value);
  }
  doc["wall_seconds"] = result.wall_seconds;
  out << doc.dump(2) << '\n';
}

std::filesystem::path write_outputs(const ExperimentResult& result,
                                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto base = dir / stem(result);
  auto csv_path = base;
  csv_path += ".csv";
  auto json_path = base;
  json_path += ".json";

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw ValidationError("cannot write " + csv_path.string());
  write_csv(csv, result);
  std::ofstream json(json_path, std::ios::binary);
  if (!json) throw ValidationError("cannot write " + json_path.string());
  write_json(json, result);
  return csv_path;
}

}  // namespace shc::lab
