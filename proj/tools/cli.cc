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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "diarization.h"
#include "json.hpp"
#include "vbdiar/der.h"
#include "vbdiar/error.h"
#include "vbdiar/json_io.h"
#include "vbdiar/plda.h"
#include "vbdiar/preprocess.h"
#include "vbdiar/random.h"
#include "vbdiar/rttm.h"
#include "vbdiar/synth.h"

namespace vbdiar::tools {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Bad flag combinations detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes via a temporary sibling and rename so readers never see a partial file.
void WriteFileAtomic(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out << contents;
    if (!out) throw DataError("failed writing " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::vector<fs::path> ListFiles(const fs::path& dir, const std::string& extension) {
  if (!fs::is_directory(dir)) throw DataError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

bool IsNonEmptyDirectory(const fs::path& dir) {
  return fs::exists(dir) && fs::is_directory(dir) && !fs::is_empty(dir);
}

CLI::Validator HalfOpenRange(double lo, double hi) {
  return CLI::Validator(
      [lo, hi](std::string& value) -> std::string {
        double v = 0.0;
        try {
          std::size_t used = 0;
          v = std::stod(value, &used);
          if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
          return "value " + value + " is not a number";
        }
        if (!(v >= lo && v < hi)) {
          std::ostringstream os;
          os << "value " << value << " not in range [" << lo << ", " << hi << ")";
          return os.str();
        }
        return {};
      },
      "[" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
}

TwoCovPlda LoadModel(const fs::path& path) { return ModelFromJson(ReadFile(path)); }

std::string FormatDouble(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  return buffer;
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  std::string out;
  CorpusSpec spec;
  std::string base_model;
  bool force = false;
};

void RunSynth(const SynthArgs& args, std::ostream& out) {
  const fs::path dir(args.out);
  if (IsNonEmptyDirectory(dir)) {
    if (!args.force) {
      throw UsageError("output directory " + dir.string() + " is not empty (use --force)");
    }
    for (const char* sub : {"embeddings", "reference"}) fs::remove_all(dir / sub);
    for (const char* file : {"corpus.json", "model.json"}) fs::remove(dir / file);
  }
  CorpusSpec spec = args.spec;
  const TwoCovPlda base = args.base_model.empty() ? IsotropicModel(spec.dim)
                                                  : LoadModel(args.base_model);
  if (!args.base_model.empty()) spec.dim = base.dim();
  const auto corpus = GenerateCorpus(spec, base);

  json meta;
  meta["format_version"] = kFormatVersion;
  meta["num_conversations"] = spec.num_conversations;
  meta["num_speakers_per_conversation"] = spec.num_speakers_per_conversation;
  meta["dim"] = spec.dim;
  meta["segments_per_conversation"] = {{"min", spec.segments_per_conversation.min},
                                       {"max", spec.segments_per_conversation.max}};
  meta["segment_duration_seconds"] = {{"min", spec.segment_duration_seconds.min},
                                      {"max", spec.segment_duration_seconds.max}};
  meta["dominance"] = spec.dominance;
  meta["separation"] = spec.separation;
  meta["duration_scaled_residual"] = spec.duration_scaled_residual;
  meta["seed"] = spec.seed;
  meta["recordings"] = json::array();
  for (const auto& conv : corpus) meta["recordings"].push_back(conv.recording_id);

  fs::create_directories(dir);
  WriteFileAtomic(dir / "corpus.json", meta.dump(2) + "\n");
  WriteFileAtomic(dir / "model.json", ModelToJson(CorpusModel(spec, base)));
  for (const auto& conv : corpus) {
    WriteFileAtomic(dir / "embeddings" / (conv.recording_id + ".jsonl"),
                    EmbeddingsToJsonl(conv.spans, conv.embeddings));
    WriteFileAtomic(dir / "reference" / (conv.recording_id + ".rttm"),
                    FormatRttm(conv.reference));
  }
  out << "wrote " << corpus.size() << " conversations to " << dir.string() << "\n";
}

// ---------------------------------------------------------- synth-train

struct SynthTrainArgs {
  std::string out;
  int speakers = 200;
  int cuts = 10;
  int dim = 10;
  double separation = 1.0;
  std::uint64_t seed = 0;
  std::string base_model;
  bool duration_scaled = false;
  bool force = false;
};

void RunSynthTrain(const SynthTrainArgs& args, std::ostream& out) {
  if (fs::exists(args.out) && !args.force) {
    throw UsageError("output file " + args.out + " exists (use --force)");
  }
  const TwoCovPlda base =
      args.base_model.empty() ? IsotropicModel(args.dim) : LoadModel(args.base_model);
  CorpusSpec scaling;
  scaling.separation = args.separation;
  scaling.dim = base.dim();
  TrainingSetOptions options;
  options.duration_scaled_residual = args.duration_scaled;
  const auto data = GeneratePldaTrainingSet(args.speakers, args.cuts,
                                            CorpusModel(scaling, base), args.seed, options);
  WriteFileAtomic(args.out, TrainingSetToJsonl(data));
  out << "wrote " << data.size() << " training vectors to " << args.out << "\n";
}

// ------------------------------------------------------------ train-plda

struct TrainArgs {
  std::string train;
  std::string out;
  int iterations = 10;
  int lda_dim = 0;
  std::string pipeline_out;
  bool no_length_norm = false;
};

void RunTrain(const TrainArgs& args, std::ostream& out, std::ostream& err) {
  if ((args.lda_dim > 0) != !args.pipeline_out.empty()) {
    throw UsageError("--lda-dim and --pipeline-out must be given together");
  }
  std::ifstream in(args.train);
  if (!in) throw DataError("cannot open " + args.train);
  auto data = TrainingSetFromJsonl(in);

  if (args.lda_dim > 0) {
    auto fit = FitPipeline(data, args.lda_dim, !args.no_length_norm);
    for (const auto& w : fit.warnings) err << "warning: " << w << "\n";
    for (auto& item : data) item.vector = fit.pipeline.Apply(item.vector);
    WriteFileAtomic(args.pipeline_out, PipelineToJson(fit.pipeline));
  }

  EmOptions options;
  options.iterations = args.iterations;
  const auto result = TrainEm(data, options);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  WriteFileAtomic(args.out, ModelToJson(result.model));
  out << "trained " << result.model.dim() << "-dim model on " << data.size()
      << " vectors; log-likelihood " << FormatDouble("%.6f", result.log_likelihood.front())
      << " -> " << FormatDouble("%.6f", result.log_likelihood.back()) << "\n";
}

// -------------------------------------------------------------- diarize

struct DiarizeArgs {
  std::string corpus;
  std::string model;
  std::string method = "vb";
  std::string init = "random";
  std::string out;
  std::string pipeline;
  std::uint64_t seed = 0;
  int speakers = 2;
  int max_iterations = 100;
  double q_tolerance = 1e-6;
  double beta_init = 0.2;
  double beta_factor = 1.05;
  bool trace = false;
  int jobs = 1;
};

void RunDiarize(const DiarizeArgs& args, bool init_given, std::ostream& out,
                std::ostream& err) {
  DiarizeOptions options;
  options.method = ParseMethod(args.method);
  options.init = ParseInit(args.init);
  options.num_speakers = args.speakers;
  options.convergence.max_iterations = args.max_iterations;
  options.convergence.q_tolerance = args.q_tolerance;
  options.schedule.beta_init = args.beta_init;
  options.schedule.factor = args.beta_factor;
  options.record_trace = args.trace;
  options.convergence.Validate();
  options.schedule.Validate();
  if (options.method == Method::kKMeansPca && init_given) {
    err << "warning: --init is ignored by kmeans-pca\n";
  }

  const fs::path corpus_dir(args.corpus);
  const fs::path model_path = args.model.empty() ? corpus_dir / "model.json" : fs::path(args.model);
  const bool uses_model = options.method != Method::kKMeansPca;
  std::optional<TwoCovPlda> model;
  if (uses_model) model = LoadModel(model_path);
  std::optional<ProjectionPipeline> pipeline;
  if (!args.pipeline.empty()) pipeline = PipelineFromJson(ReadFile(args.pipeline));

  const auto files = ListFiles(corpus_dir / "embeddings", ".jsonl");
  if (files.empty()) throw DataError("no embeddings found under " + args.corpus);
  const fs::path out_dir(args.out);
  fs::create_directories(out_dir);

  std::vector<std::exception_ptr> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        const std::string recording = files[i].stem().string();
        std::ifstream in(files[i]);
        auto segments = EmbeddingsFromJsonl(in);
        if (segments.spans.empty()) throw DataError(files[i].string() + " has no segments");
        Embeddings embeddings = segments.embeddings;
        if (pipeline && uses_model) embeddings = pipeline->ApplyRows(embeddings);

        DiarizeOptions local = options;
        local.seed = DeriveSeed(args.seed, StableHash(recording));
        const TwoCovPlda& m = uses_model ? *model : IsotropicModel(1);
        const auto result = DiarizeSegments(m, embeddings, local);

        const auto turns = TurnsFromSegments(recording, segments.spans, result.labels);
        WriteFileAtomic(out_dir / (recording + ".rttm"), FormatRttm(turns));
        if (args.trace && uses_model) {
          WriteFileAtomic(out_dir / "trace" / (recording + ".jsonl"), TraceToJsonl(result.trace));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, args.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  json run;
  run["method"] = args.method;
  run["init"] = options.method == Method::kKMeansPca ? "n/a" : args.init;
  run["seed"] = args.seed;
  run["max_iterations"] = args.max_iterations;
  run["q_tolerance"] = args.q_tolerance;
  if (options.method == Method::kVbDa) {
    run["anneal"] = {{"beta_init", options.schedule.beta_init},
                     {"factor", options.schedule.factor},
                     {"beta_max", options.schedule.beta_max}};
  }
  run["conversations"] = files.size();
  WriteFileAtomic(out_dir / "run.json", run.dump(2) + "\n");
  out << "diarized " << files.size() << " conversations with " << args.method << " into "
      << out_dir.string() << "\n";
}

// ---------------------------------------------------------------- score

struct ScoreArgs {
  std::string reference;
  std::string hypothesis;
  double collar = 0.25;
  bool json_output = false;
  std::string output;
};

std::map<std::string, TurnList> LoadRttmDir(const fs::path& dir) {
  std::map<std::string, TurnList> all;
  for (const auto& file : ListFiles(dir, ".rttm")) {
    std::ifstream in(file);
    for (auto& [recording, turns] : ReadRttm(in)) {
      if (!all.emplace(recording, std::move(turns)).second) {
        throw DataError("recording " + recording + " appears in more than one file under " +
                        dir.string());
      }
    }
  }
  return all;
}

void RunScore(const ScoreArgs& args, std::ostream& out, std::ostream& err) {
  const auto reference = LoadRttmDir(args.reference);
  const auto hypothesis = LoadRttmDir(args.hypothesis);
  if (reference.empty()) throw DataError("no reference RTTM under " + args.reference);

  std::vector<std::pair<std::string, DerReport>> reports;
  for (const auto& [recording, ref] : reference) {
    const auto it = hypothesis.find(recording);
    if (it == hypothesis.end()) throw DataError("no hypothesis for recording " + recording);
    reports.emplace_back(recording, ComputeDer(ref, it->second, args.collar));
  }
  for (const auto& [recording, hyp] : hypothesis) {
    if (!reference.contains(recording)) {
      err << "warning: hypothesis recording " << recording << " has no reference\n";
    }
  }

  // Population standard deviation across conversations.
  double sum = 0.0;
  for (const auto& [_, r] : reports) sum += 100.0 * r.der;
  const double mean = sum / static_cast<double>(reports.size());
  double squares = 0.0;
  for (const auto& [_, r] : reports) squares += (100.0 * r.der - mean) * (100.0 * r.der - mean);
  const double sigma = std::sqrt(squares / static_cast<double>(reports.size()));

  std::ostringstream report;
  if (args.json_output) {
    json j;
    j["collar"] = args.collar;
    j["conversations"] = json::array();
    for (const auto& [recording, r] : reports) {
      j["conversations"].push_back({{"recording_id", recording},
                                    {"scored_time", r.scored_time},
                                    {"miss_time", r.miss_time},
                                    {"false_alarm_time", r.false_alarm_time},
                                    {"speaker_error_time", r.speaker_error_time},
                                    {"der", r.der}});
    }
    j["num_conversations"] = reports.size();
    j["mean_der_percent"] = mean;
    j["sigma_der_percent"] = sigma;
    report << j.dump(2) << "\n";
  } else {
    char line[256];
    std::snprintf(line, sizeof(line), "%-20s %10s %9s %9s %9s %8s\n", "recording", "scored(s)",
                  "miss(s)", "fa(s)", "spkerr(s)", "DER(%)");
    report << line;
    for (const auto& [recording, r] : reports) {
      std::snprintf(line, sizeof(line), "%-20s %10.3f %9.3f %9.3f %9.3f %8.2f\n",
                    recording.c_str(), r.scored_time, r.miss_time, r.false_alarm_time,
                    r.speaker_error_time, 100.0 * r.der);
      report << line;
    }
    std::snprintf(line, sizeof(line), "conversations %zu  collar %.3f s\n", reports.size(),
                  args.collar);
    report << line;
    std::snprintf(line, sizeof(line), "mean DER (%%)  %.2f\nsigma (%%)     %.2f\n", mean, sigma);
    report << line;
  }
  if (args.output.empty()) {
    out << report.str();
  } else {
    WriteFileAtomic(args.output, report.str());
  }
}

std::string OneLine(std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  return message;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational-Bayes PLDA speaker diarization toolkit", "vbdiar"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic diarization corpus");
  synth_cmd->add_option("--out", synth.out, "Output corpus directory")->required();
  synth_cmd->add_option("--conversations", synth.spec.num_conversations, "Number of conversations")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--speakers", synth.spec.num_speakers_per_conversation,
                        "Speakers per conversation")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--dim", synth.spec.dim, "Embedding dimension")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--segments-min", synth.spec.segments_per_conversation.min,
                        "Minimum segments per conversation")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--segments-max", synth.spec.segments_per_conversation.max,
                        "Maximum segments per conversation")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--duration-min", synth.spec.segment_duration_seconds.min,
                        "Minimum segment duration (s)")
      ->check(CLI::Range(0.001, 3600.0));
  synth_cmd->add_option("--duration-max", synth.spec.segment_duration_seconds.max,
                        "Maximum segment duration (s)")
      ->check(CLI::Range(0.001, 3600.0));
  synth_cmd->add_option("--dominance", synth.spec.dominance,
                        "Expected time share of the dominant speaker")
      ->check(HalfOpenRange(0.5, 1.0));
  synth_cmd->add_option("--separation", synth.spec.separation,
                        "Between-speaker covariance multiplier")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_flag("--duration-scaled", synth.spec.duration_scaled_residual,
                      "Scale residual covariance by 5 s / segment duration");
  synth_cmd->add_option("--seed", synth.spec.seed, "Random seed");
  synth_cmd->add_option("--model", synth.base_model, "Base PLDA model JSON (default isotropic)");
  synth_cmd->add_flag("--force", synth.force, "Overwrite a non-empty output directory");

  SynthTrainArgs synth_train;
  auto* train_set_cmd =
      app.add_subcommand("synth-train", "Generate a synthetic PLDA training set (JSON Lines)");
  train_set_cmd->add_option("--out", synth_train.out, "Output JSONL file")->required();
  train_set_cmd->add_option("--speakers", synth_train.speakers, "Number of speakers")
      ->check(CLI::Range(2, 10000000));
  train_set_cmd->add_option("--cuts", synth_train.cuts, "Vectors per speaker")
      ->check(CLI::PositiveNumber);
  train_set_cmd->add_option("--dim", synth_train.dim, "Embedding dimension")
      ->check(CLI::PositiveNumber);
  train_set_cmd->add_option("--separation", synth_train.separation,
                            "Between-speaker covariance multiplier")
      ->check(CLI::PositiveNumber);
  train_set_cmd->add_option("--seed", synth_train.seed, "Random seed");
  train_set_cmd->add_option("--model", synth_train.base_model, "Base PLDA model JSON");
  train_set_cmd->add_flag("--duration-scaled", synth_train.duration_scaled,
                          "Scale residuals by 5 s / cut duration, cuts uniform in 2-20 s");
  train_set_cmd->add_flag("--force", synth_train.force, "Overwrite an existing file");

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train-plda", "Train a two-covariance PLDA model by EM");
  train_cmd->add_option("--train", train.train, "Training JSONL {speaker, vector}")->required();
  train_cmd->add_option("--out", train.out, "Output model JSON")->required();
  train_cmd->add_option("--iterations", train.iterations, "EM iterations")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--lda-dim", train.lda_dim, "Fit LDA + whitening to this dimension first")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--pipeline-out", train.pipeline_out, "Output pipeline JSON");
  train_cmd->add_flag("--no-length-norm", train.no_length_norm,
                      "Skip unit length normalization in the pipeline");

  DiarizeArgs diarize;
  auto* diarize_cmd = app.add_subcommand("diarize", "Cluster the segments of every conversation");
  diarize_cmd->add_option("--corpus", diarize.corpus, "Corpus directory")->required();
  diarize_cmd->add_option("--model", diarize.model, "PLDA model JSON (default <corpus>/model.json)");
  diarize_cmd->add_option("--method", diarize.method, "vb | vb-da | kmeans-pca")
      ->check(CLI::IsMember({"vb", "vb-da", "kmeans-pca"}));
  auto* init_opt = diarize_cmd->add_option("--init", diarize.init, "random | cos | llr")
                       ->check(CLI::IsMember({"random", "cos", "llr"}));
  diarize_cmd->add_option("--out", diarize.out, "Output hypothesis directory")->required();
  diarize_cmd->add_option("--pipeline", diarize.pipeline,
                          "Projection pipeline JSON applied before VB");
  diarize_cmd->add_option("--seed", diarize.seed, "Random seed");
  diarize_cmd->add_option("--speakers", diarize.speakers, "Speakers per conversation")
      ->check(CLI::PositiveNumber);
  diarize_cmd->add_option("--max-iterations", diarize.max_iterations,
                          "VB sweeps after annealing")
      ->check(CLI::PositiveNumber);
  diarize_cmd->add_option("--q-tolerance", diarize.q_tolerance,
                          "Convergence threshold on max |delta q|")
      ->check(CLI::NonNegativeNumber);
  diarize_cmd->add_option("--beta-init", diarize.beta_init, "Initial DA temperature")
      ->check(CLI::Range(1e-12, 1.0));
  diarize_cmd->add_option("--beta-factor", diarize.beta_factor, "DA temperature multiplier");
  diarize_cmd->add_flag("--trace", diarize.trace, "Write per-sweep VB traces");
  diarize_cmd->add_option("--jobs", diarize.jobs, "Worker threads")->check(CLI::PositiveNumber);

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score hypothesis RTTMs against references");
  score_cmd->add_option("--reference", score.reference, "Reference RTTM directory")->required();
  score_cmd->add_option("--hypothesis", score.hypothesis, "Hypothesis RTTM directory")
      ->required();
  score_cmd->add_option("--collar", score.collar, "No-score collar (s)")
      ->check(CLI::NonNegativeNumber);
  score_cmd->add_flag("--json", score.json_output, "Emit the report as JSON");
  score_cmd->add_option("--output", score.output, "Write the report to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "vbdiar: usage error: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    if (synth_cmd->parsed()) RunSynth(synth, out);
    if (train_set_cmd->parsed()) RunSynthTrain(synth_train, out);
    if (train_cmd->parsed()) RunTrain(train, out, err);
    if (diarize_cmd->parsed()) RunDiarize(diarize, init_opt->count() > 0, out, err);
    if (score_cmd->parsed()) RunScore(score, out, err);
  } catch (const UsageError& e) {
    err << "vbdiar: usage error: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "vbdiar: usage error: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "vbdiar: numerical error: " << OneLine(e.what()) << "\n";
    return kExitNumerical;
  } catch (const DataError& e) {
    err << "vbdiar: data error: " << OneLine(e.what()) << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "vbdiar: data error: " << OneLine(e.what()) << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "vbdiar: data error: " << OneLine(e.what()) << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace vbdiar::tools
