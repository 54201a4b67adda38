// Copyright 2026 The vbdiar Authors.
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

#include "vbdiar/json_io.h"

#include <sstream>

#include "json.hpp"
#include "vbdiar/error.h"

namespace vbdiar {
namespace {

using nlohmann::json;

json VectorToJson(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json MatrixToJson(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(VectorToJson(m.row(r).transpose()));
  return out;
}

Eigen::VectorXd VectorFromJson(const json& j, const char* field) {
  if (!j.is_array()) throw DataError(std::string(field) + " must be an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw DataError(std::string(field) + " must hold numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd MatrixFromJson(const json& j, const char* field) {
  if (!j.is_array() || j.empty()) throw DataError(std::string(field) + " must be a nested array");
  const auto cols = j[0].is_array() ? j[0].size() : 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Eigen::VectorXd row = VectorFromJson(j[r], field);
    if (static_cast<std::size_t>(row.size()) != cols) {
      throw DataError(std::string(field) + " has ragged rows");
    }
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

const json& Field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw DataError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

json Parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed ") + what + ": " + e.what());
  }
}

void CheckVersion(const json& j) {
  const auto& version = Field(j, "format_version");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    throw DataError("unsupported format_version");
  }
}

template <typename Fn>
void ForEachJsonLine(std::istream& is, const char* what, Fn&& fn) {
  std::string line;
  int line_number = 0;
  while (std::getline(is, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError(std::string(what) + " line " + std::to_string(line_number) +
                      ": " + e.what());
    }
    fn(j, line_number);
  }
}

}  // namespace

std::string ModelToJson(const TwoCovPlda& model) {
  json j;
  j["format_version"] = kFormatVersion;
  j["dim"] = model.dim();
  j["mu"] = VectorToJson(model.mu());
  j["between_precision"] = MatrixToJson(model.between_precision());
  j["within_precision"] = MatrixToJson(model.within_precision());
  return j.dump(2) + "\n";
}

TwoCovPlda ModelFromJson(const std::string& text) {
  const json j = Parse(text, "model JSON");
  CheckVersion(j);
  const auto& dim_field = Field(j, "dim");
  if (!dim_field.is_number_integer()) throw DataError("dim must be an integer");
  const int dim = dim_field.get<int>();
  Eigen::VectorXd mu = VectorFromJson(Field(j, "mu"), "mu");
  if (mu.size() != dim) throw DataError("mu does not have dim entries");
  return TwoCovPlda(std::move(mu),
                    MatrixFromJson(Field(j, "between_precision"), "between_precision"),
                    MatrixFromJson(Field(j, "within_precision"), "within_precision"));
}

std::string PipelineToJson(const ProjectionPipeline& pipeline) {
  json j;
  j["format_version"] = kFormatVersion;
  j["input_dim"] = pipeline.input_dim();
  j["output_dim"] = pipeline.output_dim();
  j["lda"] = MatrixToJson(pipeline.lda);
  j["whitener"] = {{"matrix", MatrixToJson(pipeline.whitener.matrix)},
                   {"offset", VectorToJson(pipeline.whitener.offset)}};
  j["length_normalize"] = pipeline.length_normalize;
  return j.dump(2) + "\n";
}

ProjectionPipeline PipelineFromJson(const std::string& text) {
  const json j = Parse(text, "pipeline JSON");
  CheckVersion(j);
  ProjectionPipeline p;
  p.lda = MatrixFromJson(Field(j, "lda"), "lda");
  const auto& whitener = Field(j, "whitener");
  p.whitener.matrix = MatrixFromJson(Field(whitener, "matrix"), "whitener.matrix");
  p.whitener.offset = VectorFromJson(Field(whitener, "offset"), "whitener.offset");
  const auto& normalize = Field(j, "length_normalize");
  if (!normalize.is_boolean()) throw DataError("length_normalize must be a boolean");
  p.length_normalize = normalize.get<bool>();
  const auto d = p.lda.rows();
  if (p.whitener.matrix.rows() != d || p.whitener.matrix.cols() != d ||
      p.whitener.offset.size() != d) {
    throw DataError("whitener shape does not match the LDA output dimension");
  }
  if (Field(j, "input_dim") != p.lda.cols() || Field(j, "output_dim") != d) {
    throw DataError("pipeline dimensions are inconsistent");
  }
  return p;
}

std::string TrainingSetToJsonl(const std::vector<LabeledVector>& data) {
  std::string out;
  for (const auto& item : data) {
    json j;
    j["speaker"] = item.speaker;
    j["vector"] = VectorToJson(item.vector);
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<LabeledVector> TrainingSetFromJsonl(std::istream& is) {
  std::vector<LabeledVector> out;
  ForEachJsonLine(is, "training set", [&](const json& j, int line) {
    const auto& speaker = Field(j, "speaker");
    if (!speaker.is_string()) {
      throw DataError("training set line " + std::to_string(line) + ": speaker must be a string");
    }
    out.push_back({speaker.get<std::string>(), VectorFromJson(Field(j, "vector"), "vector")});
    if (out.back().vector.size() != out.front().vector.size()) {
      throw DataError("training set line " + std::to_string(line) + ": dimension mismatch");
    }
  });
  return out;
}

std::string EmbeddingsToJsonl(const std::vector<SegmentSpan>& spans,
                              const Embeddings& embeddings) {
  std::string out;
  for (std::size_t m = 0; m < spans.size(); ++m) {
    json j;
    j["segment_index"] = m;
    j["start"] = spans[m].start;
    j["end"] = spans[m].end;
    j["vector"] = VectorToJson(embeddings.row(static_cast<Eigen::Index>(m)).transpose());
    out += j.dump();
    out += '\n';
  }
  return out;
}

SegmentEmbeddings EmbeddingsFromJsonl(std::istream& is) {
  std::vector<std::pair<std::size_t, std::pair<SegmentSpan, Eigen::VectorXd>>> rows;
  ForEachJsonLine(is, "embeddings", [&](const json& j, int line) {
    const auto& index = Field(j, "segment_index");
    if (!index.is_number_unsigned()) {
      throw DataError("embeddings line " + std::to_string(line) +
                      ": segment_index must be a non-negative integer");
    }
    const auto& start = Field(j, "start");
    const auto& end = Field(j, "end");
    if (!start.is_number() || !end.is_number()) {
      throw DataError("embeddings line " + std::to_string(line) + ": bad start/end");
    }
    rows.push_back({index.get<std::size_t>(),
                    {{start.get<double>(), end.get<double>()},
                     VectorFromJson(Field(j, "vector"), "vector")}});
  });
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SegmentEmbeddings out;
  if (rows.empty()) return out;
  const auto dim = rows.front().second.second.size();
  out.embeddings.resize(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t m = 0; m < rows.size(); ++m) {
    if (rows[m].first != m) throw DataError("segment_index values must be 0..M-1");
    if (rows[m].second.second.size() != dim) throw DataError("embedding dimension mismatch");
    out.spans.push_back(rows[m].second.first);
    out.embeddings.row(static_cast<Eigen::Index>(m)) = rows[m].second.second.transpose();
  }
  return out;
}

std::string TraceToJsonl(const std::vector<VbTraceRecord>& trace) {
  std::string out;
  for (const auto& r : trace) {
    json j;
    j["iteration"] = r.iteration;
    j["beta"] = r.beta;
    j["free_energy"] = r.free_energy;
    j["max_q_delta"] = r.max_q_delta;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace vbdiar
