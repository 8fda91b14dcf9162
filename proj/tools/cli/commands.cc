// Copyright 2026 The maxstable Authors
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

#include "cli/commands.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cli/stream_reader.h"
#include "json.hpp"
#include "maxstable/calibration.h"
#include "maxstable/errors.h"
#include "maxstable/estimators.h"
#include "maxstable/point_query.h"

namespace maxstable::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kBatchSize = 1 << 15;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EstimatorSpec make_spec(const std::string& kind, double r, bool heavy) {
  EstimatorSpec spec;
  spec.kind = kind == "moment" ? EstimatorKind::kMoment : EstimatorKind::kMedian;
  spec.r = r;
  spec.allow_heavy_r = heavy;
  return spec;
}

json estimate_json(const NormEstimate& e) {
  json j = {{"estimator", to_string(e.kind)},
            {"k", e.k_used},
            {"value", e.value}};
  if (e.kind == EstimatorKind::kMoment) j["r"] = e.r;
  return j;
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr) return 0;
  std::string_view text(env);
  std::uint64_t seed = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer");
  }
  return seed;
}

}  // namespace

void DuplicateTracker::observe(std::uint64_t index) {
  if (index == 0) {
    if (seen_zero_) {
      ++repeats_;
      return;
    }
    if (saturated_) return;
    seen_zero_ = true;
    ++size_;
    saturated_ = size_ >= kTrackedIndices;
    return;
  }
  if (seen_.empty()) seen_.assign(2 * kTrackedIndices, 0);
  const std::size_t mask = seen_.size() - 1;
  for (std::size_t slot = mix64(index) & mask;; slot = (slot + 1) & mask) {
    if (seen_[slot] == index) {
      ++repeats_;
      return;
    }
    if (seen_[slot] == 0) {
      if (saturated_) return;
      seen_[slot] = index;
      ++size_;
      saturated_ = size_ >= kTrackedIndices;
      return;
    }
  }
}

MaxStableSketch build_sketch(std::istream& in, const SketchConfig& config,
                             unsigned workers, BuildStats* stats) {
  StreamReader reader(in);
  DuplicateTracker dups;
  MaxStableSketch sketch(config);
  std::uint64_t items = 0;

  if (workers <= 1) {
    while (auto item = reader.next()) {
      dups.observe(item->index);
      sketch.update(*item);
      ++items;
    }
  } else {
    std::vector<MaxStableSketch> parts(workers, sketch);
    std::vector<StreamItem> batch;
    batch.reserve(kBatchSize);
    auto flush = [&] {
      const std::size_t per = (batch.size() + workers - 1) / workers;
      auto work = [&](unsigned w) {
        const std::size_t lo = std::min(batch.size(), w * per);
        const std::size_t hi = std::min(batch.size(), lo + per);
        for (std::size_t n = lo; n < hi; ++n) parts[w].update(batch[n]);
      };
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
      work(0);
      pool.clear();
      batch.clear();
    };
    while (auto item = reader.next()) {
      dups.observe(item->index);
      batch.push_back(*item);
      ++items;
      if (batch.size() == kBatchSize) flush();
    }
    flush();
    for (const auto& part : parts) sketch.merge_in(part);
  }

  if (stats != nullptr) {
    stats->items = items;
    stats->lines = reader.line_number();
    stats->repeated_indices = dups.repeats();
    stats->duplicate_tracking_saturated = dups.saturated();
  }
  return sketch;
}

MaxStableSketch read_sketch_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": cannot open");
  std::string bytes((std::istreambuf_iterator<char>(file)),
                    std::istreambuf_iterator<char>());
  try {
    return deserialize(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_sketch_file(const std::string& path, const MaxStableSketch& s) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error(path + ": cannot open for writing");
  const std::string bytes = serialize(s);
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw std::runtime_error(path + ": write failed");
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"maxsketch: max-stable sketches of non-negative signals"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON object per result");

  // build
  auto* build = app.add_subcommand("build", "Sketch a stream of (index, value) records");
  std::string build_input = "-";
  std::string build_out;
  double build_alpha = 1.0;
  std::uint64_t build_k = 0;
  std::optional<std::uint64_t> build_seed;
  unsigned build_workers = 1;
  build->add_option("input", build_input, "Stream file, '-' for stdin");
  build->add_option("--alpha", build_alpha, "Frechet tail index")->required();
  build->add_option("--k", build_k, "Sketch width K")->required();
  build->add_option("--seed", build_seed,
                    std::string("Master seed (default: $") + kSeedEnvVar + " or 0)");
  build->add_option("--out", build_out, "Output sketch file, '-' for stdout")->required();
  build->add_option("--workers", build_workers, "Ingestion threads")
      ->check(CLI::Range(1u, 256u));

  // merge
  auto* merge_cmd = app.add_subcommand("merge", "Component-wise maximum of sketch files");
  std::vector<std::string> merge_inputs;
  std::string merge_out;
  merge_cmd->add_option("inputs", merge_inputs, "Sketch files")->required();
  merge_cmd->add_option("--out", merge_out, "Output sketch file, '-' for stdout")->required();

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Estimate the l_alpha norm or a dominance norm");
  std::vector<std::string> estimate_inputs;
  std::string estimate_what = "norm";
  std::string estimate_kind = "median";
  double estimate_r = 0.0;
  bool estimate_heavy = false;
  estimate->add_option("inputs", estimate_inputs, "Sketch file(s)")->required();
  estimate->add_option("--what", estimate_what)->check(CLI::IsMember({"norm", "dominance"}));
  estimate->add_option("--estimator", estimate_kind)->check(CLI::IsMember({"median", "moment"}));
  estimate->add_option("--r", estimate_r, "Moment order (default alpha/4)");
  estimate->add_flag("--allow-heavy-r", estimate_heavy, "Permit alpha/2 <= r < alpha");

  // distance
  auto* distance_cmd = app.add_subcommand("distance", "Estimate rho_alpha between two sketched signals");
  std::string distance_a, distance_b;
  std::string distance_kind = "median";
  double distance_r = 0.0;
  bool distance_heavy = false;
  distance_cmd->add_option("a", distance_a)->required();
  distance_cmd->add_option("b", distance_b)->required();
  distance_cmd->add_option("--estimator", distance_kind)->check(CLI::IsMember({"median", "moment"}));
  distance_cmd->add_option("--r", distance_r, "Moment order (default alpha/4)");
  distance_cmd->add_flag("--allow-heavy-r", distance_heavy);

  // point
  auto* point = app.add_subcommand("point", "Point query f(i0) with its exactness criterion");
  std::string point_input;
  std::uint64_t point_index = 0;
  double point_tolerance = kDefaultCriterionTolerance;
  point->add_option("input", point_input)->required();
  point->add_option("--index", point_index)->required();
  point->add_option("--tolerance", point_tolerance, "Relative tie tolerance")
      ->check(CLI::NonNegativeNumber);

  // size
  auto* size = app.add_subcommand("size", "Sketch width for an (epsilon, delta) goal");
  std::string size_goal = "norm";
  double size_eps = 0.1, size_delta = 0.05, size_c = 1.0, size_alpha = 1.0;
  std::optional<double> size_theta;
  size->add_option("--goal", size_goal)->check(CLI::IsMember({"norm", "point", "criterion"}));
  size->add_option("--epsilon", size_eps);
  size->add_option("--delta", size_delta);
  size->add_option("--c", size_c, "Constant C for the norm goal");
  size->add_option("--alpha", size_alpha);
  size->add_option("--theta", size_theta, "Criterion theta (default alpha)");

  // calibrate
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Monte Carlo estimate of the sizing constant C");
  CalibrationOptions cal;
  std::string cal_kind = "median";
  double cal_r = 0.0;
  calibrate_cmd->add_option("--alpha", cal.alpha);
  calibrate_cmd->add_option("--estimator", cal_kind)->check(CLI::IsMember({"median", "moment"}));
  calibrate_cmd->add_option("--r", cal_r, "Moment order (default alpha/4)");
  calibrate_cmd->add_option("--epsilon", cal.epsilon);
  calibrate_cmd->add_option("--delta", cal.delta);
  calibrate_cmd->add_option("--trials", cal.trials);
  calibrate_cmd->add_option("--seed", cal.seed);
  calibrate_cmd->add_option("--signal-size", cal.signal_size);
  calibrate_cmd->add_option("--max-k", cal.max_k);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const json& j, const std::string& text) {
    if (as_json) {
      out << j.dump() << '\n';
    } else {
      out << text << '\n';
    }
  };

  try {
    if (*build) {
      SketchConfig cfg{build_alpha, build_k, build_seed ? *build_seed : default_seed()};
      cfg.validate();
      BuildStats stats;
      MaxStableSketch s = [&] {
        if (build_input == "-") return build_sketch(in, cfg, build_workers, &stats);
        std::ifstream file(build_input);
        if (!file) throw std::runtime_error(build_input + ": cannot open");
        return build_sketch(file, cfg, build_workers, &stats);
      }();
      if (stats.repeated_indices > 0) {
        err << "note: " << stats.repeated_indices
            << " repeated index occurrence(s) folded with max semantics"
            << (stats.duplicate_tracking_saturated ? " (tracking saturated; count is a lower bound)" : "")
            << '\n';
      }
      if (build_out == "-") {
        out << serialize(s);
      } else {
        write_sketch_file(build_out, s);
      }
      return 0;
    }

    if (*merge_cmd) {
      MaxStableSketch acc = read_sketch_file(merge_inputs.front());
      for (std::size_t n = 1; n < merge_inputs.size(); ++n) {
        const MaxStableSketch next = read_sketch_file(merge_inputs[n]);
        if (!(next.config() == acc.config())) {
          throw IncompatibleSketchError(merge_inputs[n] + ": sketch family differs from " +
                                        merge_inputs.front());
        }
        acc.merge_in(next);
      }
      if (merge_out == "-") {
        out << serialize(acc);
      } else {
        write_sketch_file(merge_out, acc);
      }
      return 0;
    }

    if (*estimate) {
      const EstimatorSpec spec = make_spec(estimate_kind, estimate_r, estimate_heavy);
      std::vector<MaxStableSketch> sketches;
      for (const auto& path : estimate_inputs) sketches.push_back(read_sketch_file(path));
      if (estimate_what == "norm" && sketches.size() != 1) {
        throw UsageError("--what norm takes exactly one sketch; use --what dominance");
      }
      for (std::size_t n = 1; n < sketches.size(); ++n) {
        if (!(sketches[n].config() == sketches[0].config())) {
          throw IncompatibleSketchError(estimate_inputs[n] + ": sketch family differs from " +
                                        estimate_inputs[0]);
        }
      }
      const NormEstimate e = dominance_norm(sketches, spec);
      json j = estimate_json(e);
      j["what"] = estimate_what;
      emit(j, format_double(e.value));
      return 0;
    }

    if (*distance_cmd) {
      const EstimatorSpec spec = make_spec(distance_kind, distance_r, distance_heavy);
      const auto a = read_sketch_file(distance_a);
      const auto b = read_sketch_file(distance_b);
      if (!(a.config() == b.config())) {
        throw IncompatibleSketchError(distance_b + ": sketch family differs from " + distance_a);
      }
      const DistanceEstimate d = distance(a, b, spec);
      emit({{"estimator", to_string(spec.kind)}, {"raw", d.raw}, {"clamped", d.clamped()}},
           "raw=" + format_double(d.raw) + " clamped=" + format_double(d.clamped()));
      return 0;
    }

    if (*point) {
      const auto s = read_sketch_file(point_input);
      const PointQueryResult r = point_estimate(s, point_index, point_tolerance);
      if (!r.criterion_available) {
        err << "note: K < 2, the exactness criterion is unavailable\n";
      }
      emit({{"index", point_index},
            {"estimate", r.estimate},
            {"second", r.second_smallest},
            {"criterion", r.criterion_met},
            {"criterion_available", r.criterion_available}},
           "estimate=" + format_double(r.estimate) +
               " criterion=" + (r.criterion_met ? "true" : "false"));
      return 0;
    }

    if (*size) {
      json j = {{"goal", size_goal}, {"epsilon", size_eps}, {"delta", size_delta}};
      std::uint64_t k = 0;
      if (size_goal == "norm") {
        k = k_for_norm({size_eps, size_delta, size_c});
        j["c"] = size_c;
      } else if (size_goal == "point") {
        k = k_for_point(size_eps, size_delta, size_alpha);
        j["alpha"] = size_alpha;
      } else {
        const double theta = size_theta ? *size_theta : size_alpha;
        k = k_for_criterion(size_eps, size_delta, theta, size_alpha);
        j["alpha"] = size_alpha;
        j["theta"] = theta;
        j["c_theta"] = c_theta(theta, size_alpha);
      }
      j["k"] = k;
      emit(j, std::to_string(k));
      return 0;
    }

    if (*calibrate_cmd) {
      cal.estimator = make_spec(cal_kind, cal_r, false);
      const CalibrationResult r = calibrate(cal);
      if (r.too_few_trials) {
        err << "warning: " << cal.trials << " trials give a coarse coverage estimate at delta="
            << format_double(cal.delta) << "; use at least " << static_cast<std::uint64_t>(10.0 / cal.delta) + 1
            << '\n';
      }
      if (r.reached_max_k) {
        err << "warning: coverage target not reached within --max-k " << cal.max_k << '\n';
      }
      emit({{"alpha", cal.alpha},
            {"estimator", cal_kind},
            {"epsilon", cal.epsilon},
            {"delta", cal.delta},
            {"trials", cal.trials},
            {"k", r.k},
            {"c", r.c},
            {"coverage", r.coverage},
            {"c_low", r.c_low},
            {"c_high", r.c_high},
            {"reached_max_k", r.reached_max_k}},
           "C=" + format_double(r.c) + " K=" + std::to_string(r.k) +
               " coverage=" + format_double(r.coverage) + " band=[" + format_double(r.c_low) +
               ", " + format_double(r.c_high) + "]");
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace maxstable::cli
