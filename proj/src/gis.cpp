// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/gis.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gfc/parallel.hpp"
#include "gfc/rng.hpp"
#include "gfc/solver.hpp"

namespace gfc {

namespace {

struct TripleChannels {
  int s;
  int ex;
  int ey;
};

TripleChannels triple_channels(const GisConfig& cfg, int n_triples,
                               int triple) {
  if (cfg.layout == ChannelLayout::kGrouped) {
    return {triple, n_triples + triple, 2 * n_triples + triple};
  }
  return {3 * triple, 3 * triple + 1, 3 * triple + 2};
}

int triple_count(const FeatureBatch& input) {
  if (input.channels() % 3 != 0) {
    throw ShapeError("GIS input channel count " +
                     std::to_string(input.channels()) +
                     " is not divisible by 3");
  }
  return input.channels() / 3;
}

}  // namespace

FeatureBatch gis_forward(const FeatureBatch& input, const GisConfig& cfg,
                         GreenOperatorCache& cache) {
  const int n = triple_count(input);
  FeatureBatch out(input.items(), n, input.height(), input.width(), 0.0);

  const std::size_t units = static_cast<std::size_t>(input.items()) * n;
  parallel_for(units, [&](std::size_t unit) {
    const int item = static_cast<int>(unit / n);
    const int triple = static_cast<int>(unit % n);
    const TripleChannels ch = triple_channels(cfg, n, triple);

    const ScalarField lap = divergence_planes(
        input.channel_data(item, ch.ex), input.channel_data(item, ch.ey),
        input.height(), input.width());
    ScalarField integrated = solve_laplacian(lap, cache);

    const double* s = input.channel_data(item, ch.s);
    double* dst = out.channel_data(item, triple);
    const std::size_t plane =
        static_cast<std::size_t>(input.height()) * input.width();
    for (std::size_t i = 0; i < plane; ++i) {
      dst[i] = s[i] + integrated.data()[i];
    }
  });
  return out;
}

FeatureBatch gis_adjoint(const FeatureBatch& upstream, const GisConfig& cfg,
                         GreenOperatorCache& cache) {
  const int n = upstream.channels();
  FeatureBatch out(upstream.items(), 3 * n, upstream.height(),
                   upstream.width(), 0.0);

  const std::size_t units = static_cast<std::size_t>(upstream.items()) * n;
  parallel_for(units, [&](std::size_t unit) {
    const int item = static_cast<int>(unit / n);
    const int triple = static_cast<int>(unit % n);
    const TripleChannels ch = triple_channels(cfg, n, triple);

    ScalarField g = upstream.channel_field(item, triple);
    VectorField e_grad = integrate_gradient_adjoint(g, cache);

    out.set_channel(item, ch.s, g);
    out.set_channel(item, ch.ex, e_grad.ex);
    out.set_channel(item, ch.ey, e_grad.ey);
  });
  return out;
}

GisTimingReport gis_timing_bench(int height, int width, int batch,
                                 int repeats) {
  if (height < 8 || width < 8) {
    throw std::invalid_argument("bench sizes must be >= 8");
  }
  if (batch < 1 || repeats < 1) {
    throw std::invalid_argument("bench needs batch >= 1 and repeats >= 1");
  }

  SplitMix64 rng(0x9fc5u);
  FeatureBatch input(batch, 3, height, width, 0.0);
  for (double& v : input.values()) {
    v = rng.next_unit();
  }

  using clock = std::chrono::steady_clock;
  auto seconds_since = [](clock::time_point start) {
    return std::chrono::duration<double>(clock::now() - start).count();
  };

  GreenOperatorCache cache;
  GisConfig cfg;
  GisTimingReport report;
  report.batch = batch;
  report.repeats = repeats;

  auto cold_start = clock::now();
  FeatureBatch sink = gis_forward(input, cfg, cache);
  report.cold_call_seconds = seconds_since(cold_start);

  double sum = 0.0;
  double sum_sq = 0.0;
  double min_s = 0.0;
  for (int r = 0; r < repeats; ++r) {
    auto start = clock::now();
    sink = gis_forward(input, cfg, cache);
    const double s = seconds_since(start);
    sum += s;
    sum_sq += s * s;
    min_s = (r == 0) ? s : std::min(min_s, s);
  }
  report.warm_mean_seconds = sum / repeats;
  report.warm_stddev_seconds =
      std::sqrt(std::max(0.0, sum_sq / repeats -
                                  report.warm_mean_seconds *
                                      report.warm_mean_seconds));
  report.warm_min_seconds = min_s;
  report.warm_per_solve_seconds = report.warm_mean_seconds / batch;
  return report;
}

}  // namespace gfc
