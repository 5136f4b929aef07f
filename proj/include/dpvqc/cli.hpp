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

// The dpvqc command line: gen-data, train, eval, epsilon, boundary.
//
// Exit codes: 0 on success (and for --help), 1 on runtime failure, 2 on
// usage errors.

#ifndef DPVQC_CLI_HPP_
#define DPVQC_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dpvqc/accountant.hpp"
#include "dpvqc/data.hpp"
#include "dpvqc/errors.hpp"
#include "dpvqc/harness.hpp"

namespace dpvqc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

// Writes through `path`, or to `fallback` when path is empty.
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  write(f);
  if (!f) throw Error("failed writing '" + path + "'");
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

// Data bounds of a 2D dataset, padded by `margin` on every side.
inline Bounds padded_bounds(const Dataset& data, double margin) {
  Bounds b{std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};
  for (const LabeledExample& e : data) {
    b.xmin = std::min(b.xmin, e.features[0]);
    b.xmax = std::max(b.xmax, e.features[0]);
    b.ymin = std::min(b.ymin, e.features[1]);
    b.ymax = std::max(b.ymax, e.features[1]);
  }
  b.xmin -= margin;
  b.xmax += margin;
  b.ymin -= margin;
  b.ymax += margin;
  return b;
}

}  // namespace detail

inline int cli_main(const std::vector<std::string>& args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"Differentially private variational quantum classifiers"};
  app.name("dpvqc");
  app.require_subcommand(1);

  // gen-data
  auto* gen = app.add_subcommand("gen-data", "Write a 2D dataset as CSV");
  std::string gen_task = "blobs";
  std::size_t gen_n = 200;
  std::uint64_t gen_seed = 0;
  std::optional<double> gen_noise;
  double gen_factor = kDefaultCirclesFactor;
  std::string gen_out;
  gen->add_option("--task", gen_task, "blobs, moons or circles")
      ->check(CLI::IsMember({"blobs", "moons", "circles"}));
  gen->add_option("--n", gen_n, "Number of points (even)");
  gen->add_option("--seed", gen_seed, "Master seed");
  gen->add_option("--noise", gen_noise, "Gaussian noise std (moons, circles)");
  gen->add_option("--factor", gen_factor, "Inner radius (circles)");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // train
  auto* tr = app.add_subcommand("train", "Train a model and write a report");
  std::string tr_config;
  std::optional<std::string> tr_task, tr_model, tr_images, tr_labels;
  std::optional<int> tr_epochs, tr_batch, tr_n, tr_microbatch, tr_train_subset,
      tr_test_subset, tr_workers;
  std::optional<double> tr_lr, tr_sigma, tr_clip, tr_delta, tr_target_eps;
  std::optional<std::uint64_t> tr_seed;
  std::vector<int> tr_mlp_hidden;
  bool tr_no_clip = false;
  std::string tr_report, tr_metrics, tr_save;
  tr->add_option("--config", tr_config, "JSON config; flags override it");
  tr->add_option("--task", tr_task,
                 "blobs, moons, circles, mnist01 or mnist01-8x8");
  tr->add_option("--model", tr_model, "vqc or mlp");
  tr->add_option("--epochs", tr_epochs);
  tr->add_option("--batch", tr_batch);
  tr->add_option("--lr", tr_lr);
  tr->add_option("--seed", tr_seed);
  tr->add_option("--n", tr_n, "Number of 2D samples");
  tr->add_option("--sigma", tr_sigma, "Noise multiplier; enables DP");
  tr->add_option("--clip", tr_clip, "L2 clip bound S; enables DP");
  tr->add_flag("--no-clip", tr_no_clip, "Unbounded clip (S = inf); enables DP");
  tr->add_option("--microbatch", tr_microbatch, "Micro-batch size; enables DP");
  tr->add_option("--delta", tr_delta, "Target delta; enables DP");
  tr->add_option("--target-epsilon", tr_target_eps,
                 "Pick sigma so that training reaches this epsilon");
  tr->add_option("--mnist-images", tr_images, "IDX image file");
  tr->add_option("--mnist-labels", tr_labels, "IDX label file");
  tr->add_option("--train-subset", tr_train_subset, "MNIST training subset");
  tr->add_option("--test-subset", tr_test_subset, "MNIST test subset");
  tr->add_option("--workers", tr_workers, "Gradient worker threads");
  tr->add_option("--mlp-hidden", tr_mlp_hidden,
                 "MLP hidden widths, comma separated")
      ->delimiter(',');
  tr->add_option("--report", tr_report, "Report JSON (default stdout)");
  tr->add_option("--metrics", tr_metrics, "Per-epoch metrics CSV");
  tr->add_option("--save-model", tr_save, "Model JSON");

  // eval
  auto* ev = app.add_subcommand("eval", "Score a saved model");
  std::string ev_model_path, ev_data;
  std::optional<std::string> ev_task, ev_images, ev_labels;
  std::uint64_t ev_seed = 0;
  int ev_n = 200;
  ev->add_option("--model", ev_model_path, "Model JSON")->required();
  ev->add_option("--data", ev_data, "2D CSV to score in full");
  ev->add_option("--task", ev_task, "Task whose test split is scored");
  ev->add_option("--seed", ev_seed, "Seed of the test split");
  ev->add_option("--n", ev_n, "Number of 2D samples");
  ev->add_option("--mnist-images", ev_images);
  ev->add_option("--mnist-labels", ev_labels);

  // epsilon
  auto* ep = app.add_subcommand("epsilon", "Privacy accounting for training");
  long long ep_n = 0;
  long long ep_batch = 0;
  long long ep_epochs = 0;
  double ep_sigma = 1.0;
  double ep_delta = 1e-5;
  std::optional<double> ep_target;
  ep->add_option("--n", ep_n, "Training set size")->required();
  ep->add_option("--batch", ep_batch, "Mini-batch size")->required();
  ep->add_option("--epochs", ep_epochs, "Epochs")->required();
  ep->add_option("--sigma", ep_sigma, "Noise multiplier");
  ep->add_option("--delta", ep_delta, "Target delta");
  ep->add_option("--target-epsilon", ep_target,
                 "Report the sigma that reaches this epsilon instead");

  // boundary
  auto* bd = app.add_subcommand("boundary", "Class-1 probability on a grid");
  std::string bd_model_path, bd_out;
  int bd_resolution = 50;
  std::optional<double> bd_xmin, bd_xmax, bd_ymin, bd_ymax;
  std::uint64_t bd_seed = 0;
  int bd_n = 200;
  bd->add_option("--model", bd_model_path, "Model JSON")->required();
  bd->add_option("--resolution", bd_resolution, "Points per axis");
  bd->add_option("--xmin", bd_xmin);
  bd->add_option("--xmax", bd_xmax);
  bd->add_option("--ymin", bd_ymin);
  bd->add_option("--ymax", bd_ymax);
  bd->add_option("--seed", bd_seed, "Seed of the data used for default bounds");
  bd->add_option("--n", bd_n, "Sample count used for default bounds");
  bd->add_option("--out", bd_out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const Task task = parse_task(gen_task);
      Dataset data;
      if (task == Task::kBlobs) {
        data = make_blobs(gen_n, gen_seed);
      } else if (task == Task::kMoons) {
        data = make_moons(gen_n, gen_noise.value_or(kDefaultMoonsNoise),
                          gen_seed);
      } else {
        data = make_circles(gen_n, gen_factor,
                            gen_noise.value_or(kDefaultCirclesNoise), gen_seed);
      }
      detail::emit(gen_out, out, [&](std::ostream& o) { write_csv(o, data); });
      return kExitOk;
    }

    if (tr->parsed()) {
      TrainConfig cfg;
      if (!tr_config.empty()) {
        cfg = config_from_json(detail::read_json_file(tr_config));
      }
      if (tr_task) cfg.task = parse_task(*tr_task);
      if (tr_model) cfg.model = parse_model_kind(*tr_model);
      if (tr_epochs) cfg.epochs = *tr_epochs;
      if (tr_batch) cfg.batch_size = *tr_batch;
      if (tr_lr) cfg.lr = *tr_lr;
      if (tr_seed) cfg.seed = *tr_seed;
      if (tr_n) cfg.n_samples = *tr_n;
      if (tr_train_subset) cfg.train_subset = *tr_train_subset;
      if (tr_test_subset) cfg.test_subset = *tr_test_subset;
      if (tr_workers) cfg.workers = *tr_workers;
      if (!tr_mlp_hidden.empty()) cfg.mlp_hidden = tr_mlp_hidden;
      if (tr_images || tr_labels) {
        if (!tr_images || !tr_labels) {
          throw ConfigError("--mnist-images and --mnist-labels go together");
        }
        cfg.mnist_paths = MnistPaths{*tr_images, *tr_labels};
      }
      if (tr_sigma || tr_clip || tr_no_clip || tr_microbatch || tr_delta ||
          tr_target_eps) {
        if (!cfg.privacy) cfg.privacy = PrivacyConfig{};
        if (tr_sigma) cfg.privacy->noise_multiplier = *tr_sigma;
        if (tr_clip) cfg.privacy->clip_S = *tr_clip;
        if (tr_no_clip) {
          cfg.privacy->clip_S = std::numeric_limits<double>::infinity();
        }
        if (tr_microbatch) cfg.privacy->microbatch_size = *tr_microbatch;
        if (tr_delta) cfg.privacy->delta = *tr_delta;
      }
      cfg.validate();
      const TaskData data = load_task_data(cfg);
      if (tr_target_eps) {
        cfg.privacy->noise_multiplier = sigma_for_epsilon(
            static_cast<long long>(data.train.size()), cfg.batch_size,
            cfg.epochs, cfg.privacy->delta, *tr_target_eps);
      }
      const TrainResult result = train_on(cfg, data);
      for (const std::string& w : result.report.warnings) {
        err << "warning: " << w << '\n';
      }
      const std::string report_json = result.report.to_json().dump(2) + "\n";
      detail::emit(tr_report, out,
                   [&](std::ostream& o) { o << report_json; });
      if (!tr_metrics.empty()) {
        detail::emit(tr_metrics, out, [&](std::ostream& o) {
          write_metrics_csv(o, result.report);
        });
      }
      if (!tr_save.empty()) save_model(tr_save, result.model, cfg.task);
      if (!tr_report.empty()) {
        out << "final_test_acc " << detail::format_double(result.report.final_test_acc);
        if (result.report.epsilon) {
          out << " epsilon " << detail::format_double(*result.report.epsilon);
        }
        out << '\n';
      }
      err << "trained in " << detail::format_double(result.report.wall_seconds)
          << " s\n";
      return kExitOk;
    }

    if (ev->parsed()) {
      const LoadedModel lm = load_model(ev_model_path);
      Dataset scored;
      if (!ev_data.empty()) {
        std::ifstream in(ev_data);
        if (!in) throw Error("cannot open '" + ev_data + "'");
        scored = read_csv(in);
      } else {
        TrainConfig cfg;
        cfg.task = ev_task ? parse_task(*ev_task) : lm.task;
        cfg.seed = ev_seed;
        cfg.n_samples = ev_n;
        if (ev_images && ev_labels) {
          cfg.mnist_paths = MnistPaths{*ev_images, *ev_labels};
        }
        if (is_mnist(cfg.task) && !cfg.mnist_paths) {
          throw ConfigError("MNIST evaluation needs --mnist-images and "
                            "--mnist-labels");
        }
        scored = load_task_data(cfg).test;
      }
      const Metrics m = score(
          [&](std::span<const double> x) { return lm.model.predict(x); },
          scored);
      out << "accuracy " << detail::format_double(m.accuracy) << '\n'
          << "loss " << detail::format_double(m.loss) << '\n'
          << "examples " << scored.size() << '\n';
      return kExitOk;
    }

    if (ep->parsed()) {
      if (ep_target) {
        const double sigma =
            sigma_for_epsilon(ep_n, ep_batch, ep_epochs, ep_delta, *ep_target);
        const AccountantResult r =
            training_epsilon(ep_n, ep_batch, ep_epochs, sigma, ep_delta);
        out << "sigma " << detail::format_double(sigma) << '\n'
            << "epsilon " << detail::format_double(r.epsilon) << '\n';
        return kExitOk;
      }
      const AccountantResult r =
          training_epsilon(ep_n, ep_batch, ep_epochs, ep_sigma, ep_delta);
      out << "epsilon " << detail::format_double(r.epsilon) << '\n'
          << "best_order " << detail::format_double(r.best_order) << '\n'
          << "q " << detail::format_double(static_cast<double>(ep_batch) /
                                           static_cast<double>(ep_n))
          << '\n'
          << "steps " << training_steps(ep_n, ep_batch, ep_epochs) << '\n';
      if (r.clamped) err << "warning: negative epsilon clamped to 0\n";
      return kExitOk;
    }

    if (bd->parsed()) {
      const LoadedModel lm = load_model(bd_model_path);
      if (is_mnist(lm.task)) {
        throw ArgumentError("decision boundaries need a 2D model");
      }
      Bounds b;
      if (!(bd_xmin && bd_xmax && bd_ymin && bd_ymax)) {
        TrainConfig cfg;
        cfg.task = lm.task;
        cfg.seed = bd_seed;
        cfg.n_samples = bd_n;
        const TaskData data = load_task_data(cfg);
        Dataset all = data.train;
        all.insert(all.end(), data.validate.begin(), data.validate.end());
        all.insert(all.end(), data.test.begin(), data.test.end());
        b = detail::padded_bounds(all, 0.5);
      }
      if (bd_xmin) b.xmin = *bd_xmin;
      if (bd_xmax) b.xmax = *bd_xmax;
      if (bd_ymin) b.ymin = *bd_ymin;
      if (bd_ymax) b.ymax = *bd_ymax;
      const auto rows = boundary_grid(
          [&](std::span<const double> x) { return lm.model.predict(x); }, b,
          bd_resolution);
      detail::emit(bd_out, out,
                   [&](std::ostream& o) { write_boundary_csv(o, rows); });
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dpvqc

#endif  // DPVQC_CLI_HPP_
