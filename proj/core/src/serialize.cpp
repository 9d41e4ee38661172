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

#include "pdext/serialize.hpp"

#include <cmath>

#include "pdext/errors.hpp"

namespace pdext {

using nlohmann::json;

namespace {

constexpr int kExportSamples = 513;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ArgumentError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<double> real_array(const json& j, const char* key) {
  const json& a = require(j, key);
  if (!a.is_array()) throw ArgumentError(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(a.size());
  for (const json& v : a) {
    if (!v.is_number()) throw ArgumentError(std::string("field '") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ArgumentError(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

}  // namespace

json to_json(const PdFunction& f) {
  if (f.catalog_entry()) {
    const CatalogEntry& e = *f.catalog_entry();
    json j = {{"kind", "catalog"}, {"id", to_string(e.id)}, {"a", e.a}};
    if (e.id == CatalogId::F7) j["p"] = e.p;
    return j;
  }
  std::vector<double> nodes;
  std::vector<double> re;
  std::vector<double> im;
  if (const SampledTable* t = f.table()) {
    for (std::size_t i = 0; i < t->nodes.size(); ++i) {
      if (!f.domain().contains_closed(t->nodes[i])) continue;
      nodes.push_back(t->nodes[i]);
      re.push_back(t->values[i].real());
      im.push_back(t->values[i].imag());
    }
  } else {
    if (!f.domain().bounded()) throw ArgumentError("cannot export an unbounded composite");
    const double a = f.half_width();
    for (int k = 0; k < kExportSamples; ++k) {
      const double x = -a + 2.0 * a * k / (kExportSamples - 1);
      const complex v = f(x);
      nodes.push_back(x);
      re.push_back(v.real());
      im.push_back(v.imag());
    }
  }
  return {{"kind", "sampled"}, {"nodes", nodes}, {"re", re}, {"im", im}};
}

PdFunction pd_function_from_json(const json& j) {
  const json& kind = require(j, "kind");
  if (!kind.is_string()) throw ArgumentError("field 'kind' must be a string");
  if (kind == "catalog") {
    const json& id = require(j, "id");
    if (!id.is_string()) throw ArgumentError("field 'id' must be a string");
    const CatalogId cid = catalog_id_from_string(id.get<std::string>());
    std::optional<double> a;
    if (j.contains("a")) a = number_or(j, "a", 1.0);
    return PdFunction::catalog(cid, a, number_or(j, "p", 1.0));
  }
  if (kind == "sampled") {
    std::vector<double> nodes = real_array(j, "nodes");
    std::vector<double> re = real_array(j, "re");
    std::vector<double> im = j.contains("im") ? real_array(j, "im")
                                              : std::vector<double>(re.size(), 0.0);
    if (re.size() != nodes.size() || im.size() != nodes.size()) {
      throw ArgumentError("sampled function: nodes/re/im lengths differ");
    }
    std::vector<complex> v(nodes.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {re[i], im[i]};
    const bool normalize = j.value("normalize", true);
    return PdFunction::sampled(std::move(nodes), std::move(v), normalize);
  }
  throw ArgumentError("unknown function kind");
}

json to_json(const SpectralMeasure& mu) {
  json atoms = json::array();
  for (const Atom& a : mu.atoms()) atoms.push_back({a.location, a.weight});
  json dens = json::array();
  for (const DensityComponent& d : mu.densities()) {
    if (d.id == "table") {
      dens.push_back({{"id", "table"}, {"nodes", d.table_nodes}, {"values", d.table_values}});
    } else if (d.id == "callable") {
      if (!std::isfinite(d.lo) || !std::isfinite(d.hi)) {
        throw ArgumentError("cannot export an unbounded callable density");
      }
      std::vector<double> nodes;
      std::vector<double> values;
      for (int k = 0; k < kExportSamples; ++k) {
        const double l = d.lo + (d.hi - d.lo) * k / (kExportSamples - 1);
        nodes.push_back(l);
        values.push_back(std::max(0.0, d.rho(l)));
      }
      dens.push_back({{"id", "table"}, {"nodes", nodes}, {"values", values}});
    } else {
      json c = {{"id", d.id}, {"weight", d.weight}, {"scale", d.scale}};
      if (d.id == "gamma") c["p"] = d.shape;
      dens.push_back(c);
    }
  }
  return {{"atoms", atoms}, {"densities", dens}};
}

SpectralMeasure measure_from_json(const json& j) {
  if (!j.is_object()) throw ArgumentError("measure must be a JSON object");
  std::vector<Atom> atoms;
  if (j.contains("atoms")) {
    for (const json& a : j.at("atoms")) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
        throw ArgumentError("atoms must be [location, weight] pairs");
      }
      atoms.push_back({a[0].get<double>(), a[1].get<double>()});
    }
  }
  std::vector<DensityComponent> dens;
  if (j.contains("densities")) {
    for (const json& d : j.at("densities")) {
      const json& id = require(d, "id");
      if (!id.is_string()) throw ArgumentError("density id must be a string");
      const double w = number_or(d, "weight", 1.0);
      const double s = number_or(d, "scale", 1.0);
      if (id == "table") {
        DensityComponent c =
            SpectralMeasure::table(real_array(d, "nodes"), real_array(d, "values"));
        dens.push_back(transform_component(c, w, s));
      } else {
        dens.push_back(SpectralMeasure::named(id.get<std::string>(), w, s,
                                              number_or(d, "p", 1.0)));
      }
    }
  }
  return SpectralMeasure(std::move(atoms), std::move(dens));
}

}  // namespace pdext
