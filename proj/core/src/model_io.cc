// Copyright 2026 The dpcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpcore/model_io.h"

#include <json.hpp>

#include "dpcore/errors.h"

namespace dpcore::models {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json BoundsToJson(const std::vector<Bounds>& bounds) {
  json out = json::array();
  for (const auto& b : bounds) out.push_back({b.lower(), b.upper()});
  return out;
}

std::vector<Bounds> BoundsFromJson(const json& j) {
  std::vector<Bounds> out;
  for (const auto& pair : j) {
    out.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return out;
}

json ToJson(const NBModel& m) {
  return {{"classes", m.classes},     {"class_counts", m.class_counts},
          {"means", m.means},         {"variances", m.variances},
          {"bounds", BoundsToJson(m.bounds)}, {"epsilon", m.epsilon}};
}

json ToJson(const KMeansModel& m) {
  return {{"centroids", m.centroids},
          {"bounds", BoundsToJson(m.bounds)},
          {"iterations", m.iterations},
          {"epsilon", m.epsilon}};
}

json ToJson(const LogRegModel& m) {
  return {{"classes", m.classes},     {"coefficients", m.coefficients},
          {"intercept", m.intercept}, {"data_norm", m.data_norm},
          {"lambda", m.lambda},       {"fit_intercept", m.fit_intercept},
          {"epsilon", m.epsilon}};
}

NBModel NBFromJson(const json& j) {
  NBModel m;
  j.at("classes").get_to(m.classes);
  j.at("class_counts").get_to(m.class_counts);
  j.at("means").get_to(m.means);
  j.at("variances").get_to(m.variances);
  m.bounds = BoundsFromJson(j.at("bounds"));
  j.at("epsilon").get_to(m.epsilon);
  return m;
}

KMeansModel KMeansFromJson(const json& j) {
  KMeansModel m;
  j.at("centroids").get_to(m.centroids);
  m.bounds = BoundsFromJson(j.at("bounds"));
  j.at("iterations").get_to(m.iterations);
  j.at("epsilon").get_to(m.epsilon);
  return m;
}

LogRegModel LogRegFromJson(const json& j) {
  LogRegModel m;
  j.at("classes").get_to(m.classes);
  j.at("coefficients").get_to(m.coefficients);
  j.at("intercept").get_to(m.intercept);
  j.at("data_norm").get_to(m.data_norm);
  j.at("lambda").get_to(m.lambda);
  j.at("fit_intercept").get_to(m.fit_intercept);
  j.at("epsilon").get_to(m.epsilon);
  return m;
}

DiagnosticKind KindFromName(const std::string& name) {
  if (name == DiagnosticKindName(DiagnosticKind::kPrivacyLeak)) {
    return DiagnosticKind::kPrivacyLeak;
  }
  if (name == DiagnosticKindName(DiagnosticKind::kCompatibility)) {
    return DiagnosticKind::kCompatibility;
  }
  throw ParseError("unknown diagnostic kind '" + name + "'", 0, 0);
}

}  // namespace

std::string_view ModelKind(const AnyModel& model) {
  switch (model.index()) {
    case 0:
      return "gaussian_nb";
    case 1:
      return "kmeans";
    default:
      return "logistic_regression";
  }
}

std::string SerializeModel(const ModelDocument& document) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = std::string(ModelKind(document.model));
  out["model"] = std::visit([](const auto& m) { return ToJson(m); }, document.model);
  out["seed"] = document.seed.has_value() ? json(*document.seed) : json(nullptr);
  json diagnostics = json::array();
  for (const auto& d : document.diagnostics) {
    json context = json::array();
    for (const auto& [key, value] : d.context) context.push_back({key, value});
    diagnostics.push_back({{"kind", std::string(DiagnosticKindName(d.kind))},
                           {"message", d.message},
                           {"context", context}});
  }
  out["diagnostics"] = diagnostics;
  return out.dump(2) + "\n";
}

ModelDocument DeserializeModel(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid model JSON: ") + e.what(), 1,
                     static_cast<int>(e.byte));
  }
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw ParseError("unsupported model schema version", 0, 0);
    }
    const auto kind = j.at("kind").get<std::string>();
    const json& body = j.at("model");
    ModelDocument document{NBModel{}, std::nullopt, {}};
    if (kind == "gaussian_nb") {
      document.model = NBFromJson(body);
    } else if (kind == "kmeans") {
      document.model = KMeansFromJson(body);
    } else if (kind == "logistic_regression") {
      document.model = LogRegFromJson(body);
    } else {
      throw ParseError("unknown model kind '" + kind + "'", 0, 0);
    }
    if (j.contains("seed") && !j.at("seed").is_null()) {
      document.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("diagnostics")) {
      for (const auto& d : j.at("diagnostics")) {
        Diagnostic diagnostic{KindFromName(d.at("kind").get<std::string>()),
                              d.at("message").get<std::string>(),
                              {}};
        for (const auto& pair : d.at("context")) {
          diagnostic.context.emplace_back(pair.at(0).get<std::string>(),
                                          pair.at(1).get<std::string>());
        }
        document.diagnostics.push_back(std::move(diagnostic));
      }
    }
    return document;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model document: ") + e.what(), 0, 0);
  }
}

}  // namespace dpcore::models
