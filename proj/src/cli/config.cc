// Copyright 2026 The wvprivacy Authors
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

#include "wvp/cli/config.h"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace wvp {

using nlohmann::json;

namespace {

template <typename T>
void Read(const json& j, const char* key, T& out) {
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config key '") + key +
                                "': " + e.what());
  }
}

}  // namespace

void ApplyConfigJson(const json& j, RunConfig& c) {
  if (!j.is_object()) throw std::invalid_argument("config must be an object");
  for (const auto& [key, value] : j.items()) {
    const char* k = key.c_str();
    if (key == "seed") Read(j, k, c.seed);
    else if (key == "perturbation_d") Read(j, k, c.perturbation_d);
    else if (key == "frequency_q") Read(j, k, c.frequency_q);
    else if (key == "target_p") Read(j, k, c.target_p);
    else if (key == "sigma") Read(j, k, c.sigma);
    else if (key == "mc_samples") Read(j, k, c.mc_samples);
    else if (key == "mc_escalated_samples") Read(j, k, c.mc_escalated_samples);
    else if (key == "subset_sum_cap") Read(j, k, c.subset_sum_cap);
    else if (key == "noised_trials") Read(j, k, c.noised_trials);
    else if (key == "strategies") Read(j, k, c.strategies);
    else if (key == "sweep_d") Read(j, k, c.sweep_d);
    else if (key == "noise_mode") Read(j, k, c.noise_mode);
    else if (key == "initial_budget") Read(j, k, c.initial_budget);
    else if (key == "max_budget") Read(j, k, c.max_budget);
    else if (key == "scale") Read(j, k, c.scale);
    else if (key == "max_voters") Read(j, k, c.max_voters);
    else if (key == "threads") Read(j, k, c.threads);
    else if (key == "abstain_choice") {
      if (value.is_null()) {
        c.abstain_choice.reset();
      } else {
        int a = 0;
        Read(j, k, a);
        c.abstain_choice = a;
      }
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

RunConfig LoadConfigFile(const std::filesystem::path& path,
                         const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config " + path.string() + ": " + e.what());
  }
  RunConfig config = base;
  ApplyConfigJson(j, config);
  return config;
}

json ConfigToJson(const RunConfig& c) {
  json j = {{"seed", c.seed},
            {"perturbation_d", c.perturbation_d},
            {"frequency_q", c.frequency_q},
            {"target_p", c.target_p},
            {"sigma", c.sigma},
            {"mc_samples", c.mc_samples},
            {"mc_escalated_samples", c.mc_escalated_samples},
            {"subset_sum_cap", c.subset_sum_cap},
            {"noised_trials", c.noised_trials},
            {"strategies", c.strategies},
            {"sweep_d", c.sweep_d},
            {"noise_mode", c.noise_mode},
            {"initial_budget", c.initial_budget},
            {"max_budget", c.max_budget},
            {"scale", c.scale},
            {"max_voters", c.max_voters}};
  j["abstain_choice"] =
      c.abstain_choice ? json(*c.abstain_choice) : json(nullptr);
  return j;
}

void ValidateConfig(const RunConfig& c) {
  auto require = [](bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
  };
  require(c.perturbation_d >= 0, "perturbation_d must be >= 0");
  require(c.frequency_q > 0 && c.frequency_q < 1,
          "frequency_q must lie in (0, 1)");
  require(c.target_p > 0.5 && c.target_p < 1, "target_p must lie in (0.5, 1)");
  require(c.sigma > 0, "sigma must be positive");
  require(c.mc_samples > 0, "mc_samples must be positive");
  require(c.noised_trials > 0, "noised_trials must be positive");
  require(c.initial_budget > 0, "initial_budget must be positive");
  require(c.max_budget >= c.initial_budget,
          "max_budget must be >= initial_budget");
  require(c.scale >= 0 && c.scale <= kMaxDecimalScale,
          "scale must lie in [0, 38]");
  require(c.noise_mode == "auto" || c.noise_mode == "paired" ||
              c.noise_mode == "independent",
          "noise_mode must be auto, paired or independent");
  for (double d : c.sweep_d) require(d >= 0, "sweep_d values must be >= 0");
  for (const auto& label : c.strategies) ParseStrategy(label);
}

size_t ResolveThreads(const RunConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

NoiseMode ResolveNoiseMode(const RunConfig& config, int num_choices) {
  if (config.noise_mode == "paired") return NoiseMode::kPaired;
  if (config.noise_mode == "independent") return NoiseMode::kIndependent;
  return num_choices == 2 ? NoiseMode::kPaired : NoiseMode::kIndependent;
}

IngestOptions ToIngestOptions(const RunConfig& config, IngestMode mode) {
  IngestOptions o;
  o.mode = mode;
  o.scale = config.scale;
  o.max_voters = config.max_voters;
  o.abstain_choice = config.abstain_choice;
  return o;
}

BPrivacyOptions ToBPrivacyOptions(const RunConfig& config, uint64_t seed) {
  BPrivacyOptions o;
  o.target_p = config.target_p;
  o.sigma = config.sigma;
  if (!config.strategies.empty()) {
    o.strategies.clear();
    for (const auto& label : config.strategies) {
      o.strategies.push_back(ParseStrategy(label));
    }
  }
  o.seed = seed;
  o.samples = config.mc_samples;
  o.escalated_samples = config.mc_escalated_samples;
  o.search.initial_budget = config.initial_budget;
  o.search.max_budget = config.max_budget;
  return o;
}

}  // namespace wvp
