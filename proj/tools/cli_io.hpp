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


#ifndef PDEXT_TOOLS_CLI_IO_HPP_
#define PDEXT_TOOLS_CLI_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdext/pd_function.hpp"
#include "pdext/polya.hpp"
#include "pdext/spectral_measure.hpp"

namespace pdext::cli {

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
nlohmann::json load_json(const std::string& text_or_path);

/// Function schema of the library plus
///   {"kind":"polya","base":{...},"knots":[[x,v],...]}   (knots optional)
/// for the even spline extension of a base function.
PdFunction load_function(const nlohmann::json& j);
/// The spline extension described by a "polya" spec.
SplineExtension load_extension(const nlohmann::json& j);
SpectralMeasure load_measure(const nlohmann::json& j);

/// Comma-separated numbers.
std::vector<double> parse_list(const std::string& s);

/// Three numbers "center,radius,k" for a polynomial bump.
struct BumpSpec {
  double center;
  double radius;
  int k;
};
BumpSpec parse_bump(const std::string& s);

/// CSV writer with 17 significant digits.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(const std::vector<double>& row);
  void add_row(const std::vector<std::string>& row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

std::string format_number(double v);

/// Writes `name` under the output directory; no-op when out is empty.
void write_artifact(const std::optional<std::filesystem::path>& out, const std::string& name,
                    const std::string& contents);

}  // namespace pdext::cli

#endif  // PDEXT_TOOLS_CLI_IO_HPP_
