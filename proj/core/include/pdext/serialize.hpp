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

#ifndef PDEXT_SERIALIZE_HPP_
#define PDEXT_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "pdext/pd_function.hpp"
#include "pdext/spectral_measure.hpp"

namespace pdext {

// Function schema:
//   {"kind":"catalog","id":"F3","a":1.0,"p":1.0}
//   {"kind":"sampled","nodes":[...],"re":[...],"im":[...],"normalize":true}
// Measure schema:
//   {"atoms":[[lambda,w],...],
//    "densities":[{"id":"cauchy","weight":1,"scale":1},
//                 {"id":"gamma","p":2},
//                 {"id":"table","nodes":[...],"values":[...]}]}
// Schema violations raise ArgumentError.

nlohmann::json to_json(const PdFunction& f);
PdFunction pd_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectralMeasure& mu);
SpectralMeasure measure_from_json(const nlohmann::json& j);

}  // namespace pdext

#endif  // PDEXT_SERIALIZE_HPP_
