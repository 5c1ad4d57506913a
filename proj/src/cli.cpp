// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "gfc/field.hpp"
#include "gfc/gis.hpp"
#include "gfc/green.hpp"
#include "gfc/image_io.hpp"
#include "gfc/metrics.hpp"
#include "gfc/parallel.hpp"
#include "gfc/perturb.hpp"
#include "gfc/solver.hpp"
#include "gfc/tensor_io.hpp"

namespace gfc::cli {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// PGM files go through image I/O, anything else through the tensor format.
ScalarField load_field_auto(const fs::path& path) {
  if (!fs::exists(path)) {
    throw IoError("missing file: " + path.string());
  }
  if (path.extension() == ".pgm") {
    return load_image(path);
  }
  return load_tensor_field(path);
}

void save_field_auto(const ScalarField& field, const fs::path& path) {
  if (path.extension() == ".pgm") {
    save_image(field, path);
  } else {
    save_tensor_field(field, path);
  }
}

void require_directory(const fs::path& dir, const std::string& what) {
  if (!fs::is_directory(dir)) {
    throw IoError(what + " is not a directory: " + dir.string());
  }
}

std::vector<fs::path> sorted_pgms(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Case-sensitive stem -> path index of a directory.
std::map<std::string, fs::path> stem_index(const fs::path& dir) {
  std::map<std::string, fs::path> index;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) {
      continue;
    }
    const std::string stem = entry.path().stem().string();
    auto [it, inserted] = index.emplace(stem, entry.path());
    if (!inserted) {
      throw IoError("ambiguous stem '" + stem + "' in " + dir.string());
    }
  }
  return index;
}

ScalarField min_max_normalize(const ScalarField& field) {
  const double lo = field.min();
  const double hi = field.max();
  ScalarField out = field;
  if (hi == lo) {
    std::fill(out.values().begin(), out.values().end(), 0.0);
    return out;
  }
  for (double& v : out.values()) {
    v = (v - lo) / (hi - lo);
  }
  return out;
}

constexpr char kMetricsHeader[] = "name,Fm,Pmax,meanPR,AUC,MAE,RMSE,CE";

void write_metric_row(std::ostream& out, const std::string& name,
                      const MetricReport& r) {
  out << name << ',' << fmt(r.f_measure) << ',' << fmt(r.max_precision) << ','
      << fmt(r.mean_pr) << ',' << fmt(r.auc) << ',' << fmt(r.mae) << ','
      << fmt(r.rmse) << ',' << fmt(r.cross_entropy) << '\n';
}

void write_curve_csv(const PRCurve& curve, const fs::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << "threshold,P,R,notR\n";
  for (const PrPoint& p : curve.points) {
    out << fmt(p.threshold) << ',' << fmt(p.precision) << ',' << fmt(p.recall)
        << ',' << fmt(p.false_rate) << '\n';
  }
}

struct IntegrateOptions {
  std::string ex_path;
  std::string ey_path;
  std::string out_path;
};

void do_integrate(const IntegrateOptions& opt) {
  const ScalarField ex = load_field_auto(opt.ex_path);
  const ScalarField ey = load_field_auto(opt.ey_path);
  GreenOperatorCache cache;
  const ScalarField result =
      integrate_gradient(VectorField(ex, ey), cache);
  save_field_auto(result, opt.out_path);
}

struct GisOptions {
  std::string in_path;
  std::string out_path;
  std::string layout = "grouped";
  bool report_time = false;
};

void do_gis(const GisOptions& opt) {
  if (!fs::exists(opt.in_path)) {
    throw IoError("missing file: " + opt.in_path);
  }
  const FeatureBatch input = load_tensor_batch(opt.in_path);
  GisConfig cfg;
  cfg.layout = opt.layout == "interleaved" ? ChannelLayout::kInterleaved
                                           : ChannelLayout::kGrouped;
  GreenOperatorCache cache;
  const auto start = std::chrono::steady_clock::now();
  const FeatureBatch output = gis_forward(input, cfg, cache);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  save_tensor_batch(output, opt.out_path);
  if (opt.report_time) {
    const int solves = input.items() * (input.channels() / 3);
    std::cout << "gis_forward: " << input.items() << "x" << input.channels()
              << "x" << input.height() << "x" << input.width() << " in "
              << fmt(elapsed * 1e3) << " ms ("
              << fmt(elapsed * 1e3 / solves) << " ms/solve)\n";
  }
}

struct EvalOptions {
  std::string pred_dir;
  std::string gt_dir;
  std::string mask_dir;
  std::string out_csv;
  std::string curves_dir;
  int levels = kDefaultLevels;
  double beta_squared = kDefaultBetaSquared;
};

void do_eval(const EvalOptions& opt) {
  require_directory(opt.pred_dir, "--pred");
  require_directory(opt.gt_dir, "--gt");
  if (!opt.mask_dir.empty()) {
    require_directory(opt.mask_dir, "--mask");
  }
  const std::vector<fs::path> preds = sorted_pgms(opt.pred_dir);
  if (preds.empty()) {
    throw IoError("no .pgm files in " + opt.pred_dir);
  }
  const auto gt_by_stem = stem_index(opt.gt_dir);
  const auto mask_by_stem = opt.mask_dir.empty()
                                ? std::map<std::string, fs::path>{}
                                : stem_index(opt.mask_dir);
  for (const fs::path& pred : preds) {
    const std::string stem = pred.stem().string();
    if (!gt_by_stem.count(stem)) {
      throw IoError("no ground truth for '" + stem + "' in " + opt.gt_dir);
    }
    if (!opt.mask_dir.empty() && !mask_by_stem.count(stem)) {
      throw IoError("no mask for '" + stem + "' in " + opt.mask_dir);
    }
  }
  if (!opt.curves_dir.empty()) {
    fs::create_directories(opt.curves_dir);
  }

  std::vector<MetricReport> reports(preds.size());
  parallel_for(preds.size(), [&](std::size_t i) {
    const std::string stem = preds[i].stem().string();
    const ScalarField s = load_image(preds[i]);
    const GroundTruth g =
        GroundTruth::from_field(load_image(gt_by_stem.at(stem)));
    ValidMask mask = ValidMask::all(s.height(), s.width());
    if (!opt.mask_dir.empty()) {
      const ScalarField m = load_image(mask_by_stem.at(stem));
      if (!m.same_shape(s)) {
        throw ShapeError("mask dimensions differ for '" + stem + "'");
      }
      for (std::size_t k = 0; k < m.size(); ++k) {
        mask.flags()[k] = m.values()[k] >= 0.5 ? 1 : 0;
      }
    }
    const PRCurve curve = pr_curve(s, g, mask, opt.levels);
    MetricReport r;
    r.f_measure = f_measure(curve, opt.beta_squared);
    r.max_precision = max_precision(curve);
    r.mean_pr = mean_pr(curve);
    r.auc = auc(curve);
    r.mae = mae(s, g, mask);
    r.rmse = rmse(s, g, mask);
    r.cross_entropy = cross_entropy(s, g, mask);
    r.beta_squared = opt.beta_squared;
    reports[i] = r;
    if (!opt.curves_dir.empty()) {
      write_curve_csv(curve, fs::path(opt.curves_dir) / (stem + ".csv"));
    }
  });

  std::ofstream out(opt.out_csv, std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + opt.out_csv);
  }
  out << kMetricsHeader << '\n';
  for (std::size_t i = 0; i < preds.size(); ++i) {
    write_metric_row(out, preds[i].stem().string(), reports[i]);
  }
  write_metric_row(out, "mean", average_reports(reports));
}

struct PerturbOptions {
  std::string in_dir;
  std::string out_dir;
  std::optional<double> noise;
  std::uint64_t seed = 0;
  std::optional<double> darken_factor;
};

void do_perturb(const PerturbOptions& opt) {
  require_directory(opt.in_dir, "--in");
  const std::vector<fs::path> files = sorted_pgms(opt.in_dir);
  if (files.empty()) {
    throw IoError("no .pgm files in " + opt.in_dir);
  }
  fs::create_directories(opt.out_dir);
  parallel_for(files.size(), [&](std::size_t i) {
    const std::string stem = files[i].stem().string();
    ScalarField image = load_image(files[i]);
    if (opt.darken_factor) {
      image = darken(image, *opt.darken_factor);
    }
    if (opt.noise) {
      // Per-image stream: base seed mixed with the filename stem.
      NoiseSpec spec{*opt.noise, opt.seed ^ fnv1a64(stem)};
      image = salt_pepper(image, spec);
    }
    save_image(image, fs::path(opt.out_dir) / files[i].filename());
  });
}

struct BenchOptions {
  int size = 64;
  int count = 100;
  int batch = 1;
};

constexpr int kBenchWarmup = 3;

void do_bench(const BenchOptions& opt) {
  SplitMix64 rng(0x6e5bu);
  ScalarField lap(opt.size, opt.size, 0.0);
  for (double& v : lap.values()) {
    v = rng.next_unit() - 0.5;
  }
  GreenOperatorCache cache;
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < kBenchWarmup; ++i) {
    solve_laplacian(lap, cache);
  }
  double total = 0.0;
  double min_s = 0.0;
  for (int i = 0; i < opt.count; ++i) {
    const auto start = clock::now();
    const ScalarField solved = solve_laplacian(lap, cache);
    const double s =
        std::chrono::duration<double>(clock::now() - start).count();
    total += s;
    min_s = (i == 0) ? s : std::min(min_s, s);
  }
  std::cout << "solve_laplacian " << opt.size << "x" << opt.size << ": "
            << opt.count << " warm solves, mean " << fmt(total / opt.count * 1e3)
            << " ms, min " << fmt(min_s * 1e3) << " ms, total "
            << fmt(total) << " s\n";

  const GisTimingReport gis = gis_timing_bench(opt.size, opt.size, opt.batch,
                                               std::max(opt.count / 10, 3));
  std::cout << "gis_forward " << opt.size << "x" << opt.size << " batch "
            << opt.batch << ": cold " << fmt(gis.cold_call_seconds * 1e3)
            << " ms, warm mean " << fmt(gis.warm_per_solve_seconds * 1e3)
            << " ms/solve (stddev " << fmt(gis.warm_stddev_seconds * 1e3)
            << " ms/call)\n";
}

struct DemoOptions {
  int size = 64;
  int radius = 16;
  std::string out_dir;
};

}  // namespace

void demo_disk(int size, int radius, const fs::path& out_dir) {
  if (radius < 1 || 2 * radius >= size) {
    throw std::invalid_argument("demo-disk geometry out of range: need 0 < "
                                "radius < size/2");
  }
  ScalarField disk(size, size, 0.0);
  const double center = (size - 1) / 2.0;
  const double r2 = static_cast<double>(radius) * radius;
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double dy = y - center;
      const double dx = x - center;
      if (dx * dx + dy * dy <= r2) {
        disk.at(y, x) = 1.0;
      }
    }
  }

  const VectorField edges = forward_gradient(disk);
  GreenOperatorCache cache;
  const ScalarField integrated =
      min_max_normalize(integrate_gradient(edges, cache));

  ScalarField edge_mag(size, size, 0.0);
  for (int i = 0; i < size * size; ++i) {
    edge_mag.values()[i] = std::hypot(edges.ex.values()[i],
                                      edges.ey.values()[i]);
  }
  edge_mag = min_max_normalize(edge_mag);

  const GroundTruth gt = GroundTruth::from_field(disk);
  const MetricReport report = evaluate_all(
      integrated, gt, ValidMask::all(size, size));

  fs::create_directories(out_dir);
  save_image(disk, out_dir / "ground_truth.pgm");
  save_image(edge_mag, out_dir / "edge.pgm");
  save_image(integrated, out_dir / "integrated.pgm");
  std::ofstream csv(out_dir / "metrics.csv", std::ios::trunc);
  if (!csv) {
    throw IoError("cannot write metrics.csv under " + out_dir.string());
  }
  csv << kMetricsHeader << '\n';
  write_metric_row(csv, "disk", report);
}

int run(std::vector<std::string> args) {
  CLI::App app{"Green's function convolution toolkit"};
  app.require_subcommand(1);

  IntegrateOptions integrate_opt;
  CLI::App* integrate_cmd = app.add_subcommand(
      "integrate", "Integrate a gradient field into a scalar map");
  integrate_cmd->add_option("--ex", integrate_opt.ex_path, "x-component file")
      ->required();
  integrate_cmd->add_option("--ey", integrate_opt.ey_path, "y-component file")
      ->required();
  integrate_cmd->add_option("--out", integrate_opt.out_path, "output file")
      ->required();

  GisOptions gis_opt;
  CLI::App* gis_cmd = app.add_subcommand(
      "gis", "Apply the gradient-integration-and-sum layer to a tensor");
  gis_cmd->add_option("--in", gis_opt.in_path, "input (N,3n,H,W) tensor")
      ->required();
  gis_cmd->add_option("--out", gis_opt.out_path, "output (N,n,H,W) tensor")
      ->required();
  gis_cmd->add_option("--layout", gis_opt.layout, "channel layout")
      ->check(CLI::IsMember({"grouped", "interleaved"}))
      ->capture_default_str();
  gis_cmd->add_flag("--time", gis_opt.report_time, "print wall-clock timing");

  EvalOptions eval_opt;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Evaluate saliency maps against ground-truth masks");
  eval_cmd->add_option("--pred", eval_opt.pred_dir, "saliency map directory")
      ->required();
  eval_cmd->add_option("--gt", eval_opt.gt_dir, "ground-truth directory")
      ->required();
  eval_cmd->add_option("--mask", eval_opt.mask_dir,
                       "valid-pixel mask directory");
  eval_cmd->add_option("--levels", eval_opt.levels, "threshold levels")
      ->check(CLI::IsMember({kDefaultLevels, kFastLevels}))
      ->capture_default_str();
  eval_cmd->add_option("--beta2", eval_opt.beta_squared,
                       "beta^2 of the F-measure")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cmd->add_option("--out", eval_opt.out_csv, "metrics CSV path")
      ->required();
  eval_cmd->add_option("--curves", eval_opt.curves_dir,
                       "per-image curve CSV directory");

  PerturbOptions perturb_opt;
  CLI::App* perturb_cmd = app.add_subcommand(
      "perturb", "Degrade a directory of images (noise, brightness)");
  perturb_cmd->add_option("--in", perturb_opt.in_dir, "input directory")
      ->required();
  perturb_cmd->add_option("--out", perturb_opt.out_dir, "output directory")
      ->required();
  perturb_cmd
      ->add_option("--noise", perturb_opt.noise,
                   "salt-and-pepper fraction in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  perturb_cmd->add_option("--seed", perturb_opt.seed, "noise stream seed")
      ->capture_default_str();
  perturb_cmd
      ->add_option("--darken", perturb_opt.darken_factor,
                   "brightness multiplier in [0,1]")
      ->check(CLI::Range(0.0, 1.0));

  DemoOptions demo_opt;
  CLI::App* demo_cmd = app.add_subcommand(
      "demo-disk", "Edge-to-region demo on an analytic disk");
  demo_cmd->add_option("--size", demo_opt.size, "field size in pixels")
      ->capture_default_str();
  demo_cmd->add_option("--radius", demo_opt.radius, "disk radius in pixels")
      ->capture_default_str();
  demo_cmd->add_option("--out", demo_opt.out_dir, "artifact directory")
      ->required();

  BenchOptions bench_opt;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Benchmark warm-cache solves");
  bench_cmd->add_option("--size", bench_opt.size, "grid size")
      ->check(CLI::Range(8, 4096))
      ->capture_default_str();
  bench_cmd->add_option("--count", bench_opt.count, "timed solve count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--batch", bench_opt.batch, "gis batch size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (*integrate_cmd) {
      do_integrate(integrate_opt);
    } else if (*gis_cmd) {
      do_gis(gis_opt);
    } else if (*eval_cmd) {
      do_eval(eval_opt);
    } else if (*perturb_cmd) {
      do_perturb(perturb_opt);
    } else if (*demo_cmd) {
      demo_disk(demo_opt.size, demo_opt.radius, demo_opt.out_dir);
    } else if (*bench_cmd) {
      do_bench(bench_opt);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  }
  return kOk;
}

}  // namespace gfc::cli
