// Copyright 2026 The pdext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli_io.hpp"

#include <fstream>
#include <sstream>

#include "pdext/errors.hpp"
#include "pdext/serialize.hpp"

namespace pdext::cli {

nlohmann::json load_json(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\n");
  std::string text = text_or_path;
  if (first == std::string::npos) throw ArgumentError("empty JSON argument");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(text_or_path);
    if (!in) throw ArgumentError("cannot read '" + text_or_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed JSON: ") + e.what());
  }
}

SplineExtension load_extension(const nlohmann::json& j) {
  if (!j.contains("base")) throw ArgumentError("polya spec needs a base function");
  const PdFunction base = load_function(j.at("base"));
  if (!j.contains("knots")) return build_spline_extension(base, AutoTangent{});
  std::vector<Knot> knots;
  for (const auto& k : j.at("knots")) {
    if (!k.is_array() || k.size() != 2) throw ArgumentError("knots are [x, value] pairs");
    knots.push_back({k[0].get<double>(), k[1].get<double>()});
  }
  return build_spline_extension(base, knots);
}

PdFunction load_function(const nlohmann::json& j) {
  if (j.is_object() && j.value("kind", "") == "polya") return load_extension(j).as_function();
  try {
    return pd_function_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("bad function spec: ") + e.what());
  }
}

SpectralMeasure load_measure(const nlohmann::json& j) {
  try {
    return measure_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("bad measure spec: ") + e.what());
  }
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ArgumentError("not a number: '" + item + "'");
    }
  }
  return out;
}

BumpSpec parse_bump(const std::string& s) {
  const std::vector<double> v = parse_list(s);
  if (v.size() != 3) throw ArgumentError("bump needs center,radius,k");
  return {v[0], v[1], static_cast<int>(v[2])};
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(const std::vector<double>& row) {
  std::vector<std::string> cells;
  cells.reserve(row.size());
  for (double v : row) cells.push_back(format_number(v));
  add_row(cells);
}

void CsvTable::add_row(const std::vector<std::string>& row) {
  if (row.size() != header_.size()) throw ArgumentError("CSV row width differs from the header");
  std::string line;
  for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + row[i];
  rows_.push_back(std::move(line));
}

std::string CsvTable::str() const {
  std::string s;
  for (std::size_t i = 0; i < header_.size(); ++i) s += (i ? "," : "") + header_[i];
  s += '\n';
  for (const std::string& r : rows_) s += r + '\n';
  return s;
}

void write_artifact(const std::optional<std::filesystem::path>& out, const std::string& name,
                    const std::string& contents) {
  if (!out) return;
  std::filesystem::create_directories(*out);
  std::ofstream f(*out / name, std::ios::binary);
  if (!f) throw ArgumentError("cannot write " + (*out / name).string());
  f << contents;
}

}  // namespace pdext::cli
