// Copyright 2026 The dpvqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Training and evaluation loops, experiment configuration, and the JSON / CSV
// artifacts they produce.

#ifndef DPVQC_HARNESS_HPP_
#define DPVQC_HARNESS_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "dpvqc/accountant.hpp"
#include "dpvqc/baseline.hpp"
#include "dpvqc/circuits.hpp"
#include "dpvqc/data.hpp"
#include "dpvqc/dp_optim.hpp"
#include "dpvqc/errors.hpp"
#include "dpvqc/example.hpp"
#include "dpvqc/rng.hpp"

namespace dpvqc {

using Json = nlohmann::json;

enum class Task { kBlobs, kMoons, kCircles, kMnist01, kMnist01Small };
enum class ModelKind { kVqc, kMlp };

inline std::string to_string(Task t) {
  switch (t) {
    case Task::kBlobs:
      return "blobs";
    case Task::kMoons:
      return "moons";
    case Task::kCircles:
      return "circles";
    case Task::kMnist01:
      return "mnist01";
    case Task::kMnist01Small:
      return "mnist01-8x8";
  }
  return "?";
}

inline std::string to_string(ModelKind m) {
  return m == ModelKind::kVqc ? "vqc" : "mlp";
}

inline Task parse_task(const std::string& s) {
  for (Task t : {Task::kBlobs, Task::kMoons, Task::kCircles, Task::kMnist01,
                 Task::kMnist01Small}) {
    if (to_string(t) == s) return t;
  }
  throw ConfigError("unknown task '" + s +
                    "' (expected blobs, moons, circles, mnist01, mnist01-8x8)");
}

inline ModelKind parse_model_kind(const std::string& s) {
  if (s == "vqc") return ModelKind::kVqc;
  if (s == "mlp") return ModelKind::kMlp;
  throw ConfigError("unknown model '" + s + "' (expected vqc or mlp)");
}

inline bool is_mnist(Task t) {
  return t == Task::kMnist01 || t == Task::kMnist01Small;
}

struct MnistPaths {
  std::string images;
  std::string labels;
};

struct TrainConfig {
  Task task = Task::kBlobs;
  ModelKind model = ModelKind::kVqc;
  int epochs = 30;
  int batch_size = 32;
  double lr = 0.05;
  double rmsprop_alpha = 0.9;
  double rmsprop_eps = 1e-8;
  double momentum = 0.5;
  std::optional<PrivacyConfig> privacy;
  std::uint64_t seed = 0;
  int n_samples = 200;
  std::optional<MnistPaths> mnist_paths;
  // MNIST only; 0 keeps the whole split.
  int train_subset = 1000;
  int test_subset = 500;
  // MLP hidden layer widths; empty selects the task default.
  std::vector<int> mlp_hidden;
  // 0 means DPVQC_WORKERS or the hardware concurrency.
  int workers = 0;

  void validate() const {
    if (epochs < 0) throw ConfigError("epochs must be >= 0");
    if (batch_size < 1) throw ConfigError("batch_size must be positive");
    if (!(lr > 0) || !std::isfinite(lr)) throw ConfigError("lr must be positive");
    if (!(rmsprop_alpha >= 0 && rmsprop_alpha < 1)) {
      throw ConfigError("rmsprop_alpha must lie in [0, 1)");
    }
    if (!(rmsprop_eps > 0)) throw ConfigError("rmsprop_eps must be positive");
    if (!(momentum >= 0 && momentum < 1)) {
      throw ConfigError("momentum must lie in [0, 1)");
    }
    if (privacy) {
      privacy->validate();
      if (batch_size % privacy->microbatch_size != 0) {
        throw ConfigError("microbatch_size " +
                          std::to_string(privacy->microbatch_size) +
                          " does not divide batch_size " +
                          std::to_string(batch_size));
      }
    }
    if (is_mnist(task)) {
      if (!mnist_paths) throw ConfigError("MNIST tasks need mnist_paths");
      if (train_subset < 0 || test_subset < 0) {
        throw ConfigError("subset sizes must be >= 0");
      }
    } else if (n_samples < 2 || n_samples % 2 != 0) {
      throw ConfigError("n_samples must be even and >= 2");
    }
    if (workers < 0) throw ConfigError("workers must be >= 0");
    for (int h : mlp_hidden) {
      if (h < 1) throw ConfigError("mlp_hidden widths must be positive");
    }
  }
};

inline Json to_json(const TrainConfig& c) {
  Json j;
  j["task"] = to_string(c.task);
  j["model"] = to_string(c.model);
  j["epochs"] = c.epochs;
  j["batch_size"] = c.batch_size;
  j["lr"] = c.lr;
  j["rmsprop_alpha"] = c.rmsprop_alpha;
  j["rmsprop_eps"] = c.rmsprop_eps;
  j["momentum"] = c.momentum;
  if (c.privacy) {
    Json p;
    // JSON has no infinity; an unbounded clip is written as null.
    p["l2_clip"] = std::isfinite(c.privacy->clip_S) ? Json(c.privacy->clip_S)
                                                    : Json(nullptr);
    p["noise_multiplier"] = c.privacy->noise_multiplier;
    p["microbatch_size"] = c.privacy->microbatch_size;
    p["delta"] = c.privacy->delta;
    j["privacy"] = p;
  } else {
    j["privacy"] = nullptr;
  }
  j["seed"] = c.seed;
  j["n_samples"] = c.n_samples;
  if (c.mnist_paths) {
    j["mnist_paths"] = {{"images", c.mnist_paths->images},
                        {"labels", c.mnist_paths->labels}};
  } else {
    j["mnist_paths"] = nullptr;
  }
  j["train_subset"] = c.train_subset;
  j["test_subset"] = c.test_subset;
  j["mlp_hidden"] = c.mlp_hidden;
  j["workers"] = c.workers;
  return j;
}

// Missing keys keep their defaults; unknown keys are rejected.
inline TrainConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> kKeys = {
      "task",          "model",        "epochs",      "batch_size",
      "lr",            "rmsprop_alpha", "rmsprop_eps", "momentum",
      "privacy",       "seed",         "n_samples",   "mnist_paths",
      "train_subset",  "test_subset",  "workers",     "mlp_hidden"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  TrainConfig c;
  try {
    if (j.contains("task")) c.task = parse_task(j["task"].get<std::string>());
    if (j.contains("model")) {
      c.model = parse_model_kind(j["model"].get<std::string>());
    }
    if (j.contains("epochs")) c.epochs = j["epochs"].get<int>();
    if (j.contains("batch_size")) c.batch_size = j["batch_size"].get<int>();
    if (j.contains("lr")) c.lr = j["lr"].get<double>();
    if (j.contains("rmsprop_alpha")) {
      c.rmsprop_alpha = j["rmsprop_alpha"].get<double>();
    }
    if (j.contains("rmsprop_eps")) c.rmsprop_eps = j["rmsprop_eps"].get<double>();
    if (j.contains("momentum")) c.momentum = j["momentum"].get<double>();
    if (j.contains("privacy") && !j["privacy"].is_null()) {
      const Json& p = j["privacy"];
      PrivacyConfig pc;
      if (p.contains("l2_clip")) {
        pc.clip_S = p["l2_clip"].is_null()
                        ? std::numeric_limits<double>::infinity()
                        : p["l2_clip"].get<double>();
      }
      if (p.contains("noise_multiplier")) {
        pc.noise_multiplier = p["noise_multiplier"].get<double>();
      }
      if (p.contains("microbatch_size")) {
        pc.microbatch_size = p["microbatch_size"].get<int>();
      }
      if (p.contains("delta")) pc.delta = p["delta"].get<double>();
      c.privacy = pc;
    }
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("n_samples")) c.n_samples = j["n_samples"].get<int>();
    if (j.contains("mnist_paths") && !j["mnist_paths"].is_null()) {
      c.mnist_paths = MnistPaths{j["mnist_paths"].at("images").get<std::string>(),
                                 j["mnist_paths"].at("labels").get<std::string>()};
    }
    if (j.contains("train_subset")) c.train_subset = j["train_subset"].get<int>();
    if (j.contains("test_subset")) c.test_subset = j["test_subset"].get<int>();
    if (j.contains("workers")) c.workers = j["workers"].get<int>();
    if (j.contains("mlp_hidden")) {
      c.mlp_hidden = j["mlp_hidden"].get<std::vector<int>>();
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return c;
}

struct TaskData {
  Dataset train;
  Dataset validate;
  Dataset test;
};

// Generates or loads the task's examples and splits them. 2D tasks use a
// 60/20/20 split; MNIST uses 60/40 and then keeps the first train_subset
// and test_subset examples of each side.
inline TaskData load_task_data(const TrainConfig& c) {
  Dataset all;
  SplitSpec spec;
  spec.seed = c.seed;
  switch (c.task) {
    case Task::kBlobs:
      all = make_blobs(c.n_samples, c.seed);
      break;
    case Task::kMoons:
      all = make_moons(c.n_samples, kDefaultMoonsNoise, c.seed);
      break;
    case Task::kCircles:
      all = make_circles(c.n_samples, kDefaultCirclesFactor,
                         kDefaultCirclesNoise, c.seed);
      break;
    case Task::kMnist01:
    case Task::kMnist01Small: {
      if (!c.mnist_paths) throw ConfigError("MNIST tasks need mnist_paths");
      const Dataset raw =
          load_mnist_idx(c.mnist_paths->images, c.mnist_paths->labels);
      all = c.task == Task::kMnist01 ? filter_binary_and_pad(raw)
                                     : filter_binary_8x8(raw);
      spec.fractions = {0.6, 0.0, 0.4};
      break;
    }
  }
  SplitResult s = split(all, spec);
  if (is_mnist(c.task)) {
    if (c.train_subset > 0 &&
        s.train.size() > static_cast<std::size_t>(c.train_subset)) {
      s.train.resize(c.train_subset);
    }
    if (c.test_subset > 0 &&
        s.test.size() > static_cast<std::size_t>(c.test_subset)) {
      s.test.resize(c.test_subset);
    }
  }
  return {std::move(s.train), std::move(s.validate), std::move(s.test)};
}

inline std::string vqc_architecture_for(Task t) {
  switch (t) {
    case Task::kMnist01:
      return "vqc-mnist";
    case Task::kMnist01Small:
      return "vqc-mnist-8x8";
    default:
      return "vqc-2d";
  }
}

inline std::vector<int> mlp_layers_for(Task t,
                                       const std::vector<int>& hidden = {}) {
  if (!hidden.empty()) {
    std::vector<int> sizes = {t == Task::kMnist01        ? 1024
                              : t == Task::kMnist01Small ? 64
                                                         : 2};
    sizes.insert(sizes.end(), hidden.begin(), hidden.end());
    sizes.push_back(kNumClasses);
    return sizes;
  }
  switch (t) {
    case Task::kMnist01:
      return {1024, 1, 2};
    case Task::kMnist01Small:
      return {64, 1, 2};
    default:
      return {2, 7, 2};
  }
}

// A trained VQC or MLP behind one interface.
struct Classifier {
  ModelKind kind = ModelKind::kVqc;
  VqcModel vqc;
  MlpModel mlp;

  std::vector<double>& params() {
    return kind == ModelKind::kVqc ? vqc.params : mlp.params;
  }
  const std::vector<double>& params() const {
    return kind == ModelKind::kVqc ? vqc.params : mlp.params;
  }

  Probabilities predict(std::span<const double> x) const {
    return kind == ModelKind::kVqc ? predict_proba(model_forward(vqc, x))
                                   : mlp_forward(mlp, x);
  }

  // Per-example loss gradient evaluated at `params` instead of the stored
  // parameters.
  std::vector<double> gradient(std::span<const double> params,
                               const LabeledExample& ex) const {
    if (kind == ModelKind::kVqc) {
      VqcModel m{vqc.architecture, vqc.blocks, {params.begin(), params.end()}};
      return param_shift_grad(m, ex.features, ex.label);
    }
    MlpModel m{mlp.layer_sizes, {params.begin(), params.end()}};
    return mlp_grad(m, ex.features, ex.label);
  }
};

template <class Engine>
Classifier init_classifier(ModelKind kind, Task task, Engine& rng,
                           const std::vector<int>& mlp_hidden = {}) {
  Classifier c;
  c.kind = kind;
  if (kind == ModelKind::kVqc) {
    c.vqc = build_vqc(vqc_architecture_for(task));
    init_vqc_params(c.vqc, rng);
  } else {
    c.mlp = mlp_init(mlp_layers_for(task, mlp_hidden), rng);
  }
  return c;
}

using PredictFn = std::function<Probabilities(std::span<const double>)>;

inline std::size_t argmax(const Probabilities& p) { return p[1] > p[0] ? 1 : 0; }

// Fraction of examples whose argmax prediction equals the label. Ties go to
// class 0.
inline double evaluate(const PredictFn& predict, const Dataset& test) {
  if (test.empty()) throw ArgumentError("cannot evaluate on an empty set");
  std::size_t correct = 0;
  for (const LabeledExample& e : test) {
    if (static_cast<int>(argmax(predict(e.features))) == e.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

struct Metrics {
  double loss = 0.0;
  double accuracy = 0.0;
};

inline Metrics score(const PredictFn& predict, const Dataset& data,
                     std::size_t workers = 0) {
  if (data.empty()) throw ArgumentError("cannot score an empty set");
  std::vector<Probabilities> probs(data.size());
  parallel_for(
      data.size(), [&](std::size_t i) { probs[i] = predict(data[i].features); },
      workers);
  Metrics m;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    m.loss += cross_entropy(probs[i], data[i].label);
    if (static_cast<int>(argmax(probs[i])) == data[i].label) ++correct;
  }
  m.loss /= static_cast<double>(data.size());
  m.accuracy = static_cast<double>(correct) / static_cast<double>(data.size());
  return m;
}

// Infinite epsilon (sigma = 0) has no JSON number; it is written as a string.
inline Json epsilon_json(double eps) {
  return std::isfinite(eps) ? Json(eps) : Json("inf");
}

struct TrainReport {
  std::vector<int> epochs;
  std::vector<double> train_loss;
  std::vector<double> train_acc;
  std::vector<double> test_loss;
  std::vector<double> test_acc;
  double final_test_acc = 0.0;
  std::optional<double> epsilon;
  std::optional<double> best_order;
  std::uint64_t seed = 0;
  TrainConfig config;
  std::vector<std::string> warnings;
  // Kept out of the JSON so that reports are reproducible byte for byte.
  double wall_seconds = 0.0;

  Json to_json() const {
    Json j;
    j["epochs"] = epochs;
    j["train_loss"] = train_loss;
    j["train_acc"] = train_acc;
    j["test_loss"] = test_loss;
    j["test_acc"] = test_acc;
    j["final_test_acc"] = final_test_acc;
    j["epsilon"] = epsilon ? epsilon_json(*epsilon) : Json(nullptr);
    j["best_order"] = best_order ? Json(*best_order) : Json(nullptr);
    j["seed"] = seed;
    j["config"] = dpvqc::to_json(config);
    j["warnings"] = warnings;
    return j;
  }
};

struct TrainResult {
  TrainReport report;
  Classifier model;
};

inline TrainResult train_on(const TrainConfig& config, const TaskData& data) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  if (data.train.empty() || data.test.empty()) {
    throw ConfigError("training and test sets must be nonempty");
  }
  const std::size_t n_train = data.train.size();
  const auto batch = static_cast<std::size_t>(config.batch_size);
  if (batch > n_train) {
    throw ConfigError("batch_size " + std::to_string(batch) +
                      " exceeds the training set size " +
                      std::to_string(n_train));
  }
  const std::size_t workers = static_cast<std::size_t>(config.workers);

  TrainResult result;
  TrainReport& report = result.report;
  report.seed = config.seed;
  report.config = config;
  if (config.privacy &&
      config.privacy->delta > 1.0 / static_cast<double>(n_train)) {
    report.warnings.push_back("delta " + std::to_string(config.privacy->delta) +
                              " exceeds 1/n = " +
                              std::to_string(1.0 / n_train));
  }

  StreamEngine init_rng = derive_stream(config.seed, kInitStream);
  StreamEngine shuffle_rng = derive_stream(config.seed, kShuffleStream);
  StreamEngine noise_rng = derive_stream(config.seed, kNoiseStream);

  Classifier& model = result.model;
  model = init_classifier(config.model, config.task, init_rng,
                          config.mlp_hidden);
  OptimizerState opt =
      OptimizerState::create(model.params().size(), config.lr,
                             config.rmsprop_alpha, config.momentum,
                             config.rmsprop_eps);
  const GradFn grad_fn = [&model](std::span<const double> p,
                                  const LabeledExample& ex) {
    return model.gradient(p, ex);
  };
  const PredictFn predict = [&model](std::span<const double> x) {
    return model.predict(x);
  };

  std::vector<std::size_t> order(n_train);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<LabeledExample> mb(batch);
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    // The trailing partial batch is dropped.
    for (std::size_t start_i = 0; start_i + batch <= n_train; start_i += batch) {
      for (std::size_t k = 0; k < batch; ++k) {
        mb[k] = data.train[order[start_i + k]];
      }
      if (config.privacy) {
        dp_minibatch_update(model.params(), mb, grad_fn, *config.privacy, opt,
                            noise_rng, workers);
      } else {
        minibatch_update(model.params(), mb, grad_fn, opt, workers);
      }
    }
    const Metrics tr = score(predict, data.train, workers);
    const Metrics te = score(predict, data.test, workers);
    report.epochs.push_back(epoch);
    report.train_loss.push_back(tr.loss);
    report.train_acc.push_back(tr.accuracy);
    report.test_loss.push_back(te.loss);
    report.test_acc.push_back(te.accuracy);
  }
  report.final_test_acc = report.test_acc.empty()
                              ? score(predict, data.test, workers).accuracy
                              : report.test_acc.back();
  if (config.privacy) {
    if (config.epochs == 0) {
      report.epsilon = 0.0;
    } else {
      const AccountantResult acct = training_epsilon(
          static_cast<long long>(n_train), static_cast<long long>(batch),
          config.epochs, config.privacy->noise_multiplier,
          config.privacy->delta);
      report.epsilon = acct.epsilon;
      if (std::isfinite(acct.epsilon)) report.best_order = acct.best_order;
      if (acct.clamped) {
        report.warnings.push_back("negative epsilon clamped to 0");
      }
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

inline TrainResult train(const TrainConfig& config) {
  config.validate();
  return train_on(config, load_task_data(config));
}

inline void write_metrics_csv(std::ostream& out, const TrainReport& r) {
  out << "epoch,train_loss,train_acc,test_loss,test_acc\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < r.epochs.size(); ++i) {
    out << r.epochs[i] << ',' << r.train_loss[i] << ',' << r.train_acc[i] << ','
        << r.test_loss[i] << ',' << r.test_acc[i] << '\n';
  }
}

struct Bounds {
  double xmin = -1.5;
  double xmax = 1.5;
  double ymin = -1.5;
  double ymax = 1.5;
};

struct BoundaryRow {
  double x1 = 0.0;
  double x2 = 0.0;
  double p1 = 0.0;
};

// resolution^2 points spanning the bounds inclusively, x1 varying fastest.
inline std::vector<BoundaryRow> boundary_grid(const PredictFn& predict,
                                              const Bounds& b, int resolution) {
  if (resolution < 2) throw ArgumentError("resolution must be >= 2");
  if (!(b.xmax > b.xmin) || !(b.ymax > b.ymin) || !std::isfinite(b.xmin) ||
      !std::isfinite(b.xmax) || !std::isfinite(b.ymin) ||
      !std::isfinite(b.ymax)) {
    throw ArgumentError("boundary bounds must be finite with min < max");
  }
  std::vector<BoundaryRow> rows;
  rows.reserve(static_cast<std::size_t>(resolution) * resolution);
  const double last = resolution - 1;
  for (int iy = 0; iy < resolution; ++iy) {
    const double y = iy == resolution - 1
                         ? b.ymax
                         : b.ymin + (b.ymax - b.ymin) * (iy / last);
    for (int ix = 0; ix < resolution; ++ix) {
      const double x = ix == resolution - 1
                           ? b.xmax
                           : b.xmin + (b.xmax - b.xmin) * (ix / last);
      const std::vector<double> point = {x, y};
      rows.push_back({x, y, predict(point)[1]});
    }
  }
  return rows;
}

inline void write_boundary_csv(std::ostream& out,
                               const std::vector<BoundaryRow>& rows) {
  out << "x1,x2,p1\n";
  out << std::setprecision(17);
  for (const BoundaryRow& r : rows) {
    out << r.x1 << ',' << r.x2 << ',' << r.p1 << '\n';
  }
}

inline constexpr const char* kModelFormat = "dpvqc-model";
inline constexpr int kModelFormatVersion = 1;

inline Json model_to_json(const Classifier& c, Task task) {
  Json j;
  j["format"] = kModelFormat;
  j["version"] = kModelFormatVersion;
  j["task"] = to_string(task);
  if (c.kind == ModelKind::kVqc) {
    j["architecture"] = c.vqc.architecture;
  } else {
    j["architecture"] = "mlp";
    j["layer_sizes"] = c.mlp.layer_sizes;
  }
  j["params"] = c.params();
  return j;
}

struct LoadedModel {
  Classifier model;
  Task task = Task::kBlobs;
};

inline LoadedModel model_from_json(const Json& j) {
  try {
    if (j.at("format").get<std::string>() != kModelFormat) {
      throw ArgumentError("not a dpvqc model file");
    }
    if (j.at("version").get<int>() != kModelFormatVersion) {
      throw ArgumentError("unsupported model format version " +
                          std::to_string(j.at("version").get<int>()));
    }
    LoadedModel out;
    out.task = parse_task(j.at("task").get<std::string>());
    const std::string arch = j.at("architecture").get<std::string>();
    auto params = j.at("params").get<std::vector<double>>();
    if (arch == "mlp") {
      out.model.kind = ModelKind::kMlp;
      out.model.mlp.layer_sizes = j.at("layer_sizes").get<std::vector<int>>();
      out.model.mlp.params = std::move(params);
      out.model.mlp.validate();
    } else {
      out.model.kind = ModelKind::kVqc;
      out.model.vqc = build_vqc(arch);
      out.model.vqc.params = std::move(params);
      out.model.vqc.validate();
    }
    return out;
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("malformed model file: ") + e.what());
  }
}

inline void save_model(const std::string& path, const Classifier& c,
                       Task task) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << model_to_json(c, task).dump(2) << '\n';
}

inline LoadedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ArgumentError("'" + path + "' is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

}  // namespace dpvqc

#endif  // DPVQC_HARNESS_HPP_
