// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gfc {

namespace {

constexpr double kCrossEntropyEps = 1e-7;

void check_triplet(const ScalarField& s, const GroundTruth& g,
                   const ValidMask& mask) {
  if (s.height() != g.height() || s.width() != g.width() ||
      s.height() != mask.height() || s.width() != mask.width()) {
    throw ShapeError("saliency map, ground truth and mask dims differ");
  }
  if (mask.count() == 0) {
    throw MetricError("valid mask selects no pixels");
  }
}

void check_unit_range(const ScalarField& s) {
  for (double v : s.values()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("saliency values must lie in [0, 1]");
    }
  }
}

double trapezoid_sorted(std::vector<std::pair<double, double>> points) {
  // (abscissa, ordinate), sorted ascending; duplicate abscissae merged
  // by max ordinate.
  std::sort(points.begin(), points.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& p : points) {
    if (!merged.empty() && merged.back().first == p.first) {
      merged.back().second = std::max(merged.back().second, p.second);
    } else {
      merged.push_back(p);
    }
  }
  if (merged.size() == 1) {
    return merged.front().second;
  }
  double area = 0.0;
  for (std::size_t i = 1; i < merged.size(); ++i) {
    area += (merged[i].first - merged[i - 1].first) *
            (merged[i].second + merged[i - 1].second) * 0.5;
  }
  return area;
}

void check_curve(const PRCurve& curve) {
  if (curve.points.empty()) {
    throw std::invalid_argument("empty PR curve");
  }
}

}  // namespace

GroundTruth::GroundTruth(int height, int width,
                         std::vector<std::uint8_t> mask)
    : height_(height), width_(width), mask_(std::move(mask)) {
  if (height < 1 || width < 1) {
    throw ShapeError("ground truth dimensions must be >= 1");
  }
  if (mask_.size() != static_cast<std::size_t>(height) * width) {
    throw ShapeError("ground truth flag count does not match dims");
  }
  for (auto& v : mask_) {
    v = v ? 1 : 0;
  }
}

GroundTruth GroundTruth::from_field(const ScalarField& field,
                                    double threshold) {
  std::vector<std::uint8_t> mask(field.size());
  std::transform(field.values().begin(), field.values().end(), mask.begin(),
                 [threshold](double v) {
                   return static_cast<std::uint8_t>(v >= threshold ? 1 : 0);
                 });
  return GroundTruth(field.height(), field.width(), std::move(mask));
}

PRCurve pr_curve(const ScalarField& s, const GroundTruth& g,
                 const ValidMask& mask, int levels) {
  check_triplet(s, g, mask);
  check_unit_range(s);
  if (levels < 2) {
    throw std::invalid_argument("threshold sweep needs >= 2 levels");
  }

  std::vector<double> thresholds(levels);
  for (int k = 0; k < levels; ++k) {
    thresholds[k] = static_cast<double>(k) / (levels - 1);
  }

  // A pixel with value v is predicted positive for every level k with
  // t_k <= v; bucket it at the largest such k. The floor expression can
  // land one level off when v sits exactly on the grid, so it is repaired
  // against the actual thresholds to keep ties exact.
  std::vector<std::int64_t> top_level_pos(levels, 0);
  std::vector<std::int64_t> top_level_neg(levels, 0);
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) {
      if (!mask.at(y, x)) {
        continue;
      }
      const double v = s.at(y, x);
      int k = static_cast<int>(v * (levels - 1));
      k = std::clamp(k, 0, levels - 1);
      while (k + 1 < levels && v >= thresholds[k + 1]) {
        ++k;
      }
      while (k > 0 && v < thresholds[k]) {
        --k;
      }
      if (g.at(y, x)) {
        ++positives;
        ++top_level_pos[k];
      } else {
        ++negatives;
        ++top_level_neg[k];
      }
    }
  }
  if (positives == 0) {
    throw MetricError(
        "degenerate ground truth: no positive pixel under the mask");
  }
  if (negatives == 0) {
    throw MetricError(
        "degenerate ground truth: no negative pixel under the mask");
  }

  PRCurve curve;
  curve.levels = levels;
  curve.points.resize(levels);
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  for (int k = levels - 1; k >= 0; --k) {
    tp += top_level_pos[k];
    fp += top_level_neg[k];
    const std::int64_t predicted = tp + fp;
    PrPoint& p = curve.points[k];
    p.threshold = thresholds[k];
    p.precision = predicted == 0
                      ? 1.0
                      : static_cast<double>(tp) / static_cast<double>(predicted);
    p.recall = static_cast<double>(tp) / static_cast<double>(positives);
    p.false_rate = static_cast<double>(fp) / static_cast<double>(negatives);
  }
  return curve;
}

double f_measure(const PRCurve& curve, double beta_squared) {
  check_curve(curve);
  double best = 0.0;
  for (const PrPoint& p : curve.points) {
    const double denom = beta_squared * p.precision + p.recall;
    if (denom == 0.0) {
      continue;
    }
    best = std::max(best,
                    (1.0 + beta_squared) * p.precision * p.recall / denom);
  }
  return best;
}

double max_precision(const PRCurve& curve) {
  check_curve(curve);
  double best = 0.0;
  for (const PrPoint& p : curve.points) {
    best = std::max(best, p.precision);
  }
  return best;
}

double mean_pr(const PRCurve& curve) {
  check_curve(curve);
  std::vector<std::pair<double, double>> points;
  points.reserve(curve.points.size());
  for (const PrPoint& p : curve.points) {
    points.emplace_back(p.recall, p.precision);
  }
  return trapezoid_sorted(std::move(points));
}

double auc(const PRCurve& curve) {
  check_curve(curve);
  std::vector<std::pair<double, double>> points;
  points.reserve(curve.points.size());
  for (const PrPoint& p : curve.points) {
    points.emplace_back(p.false_rate, p.recall);
  }
  return trapezoid_sorted(std::move(points));
}

double mae(const ScalarField& s, const GroundTruth& g, const ValidMask& mask) {
  check_triplet(s, g, mask);
  double sum = 0.0;
  std::size_t n = 0;
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) {
      if (!mask.at(y, x)) {
        continue;
      }
      sum += std::abs(s.at(y, x) - static_cast<double>(g.at(y, x)));
      ++n;
    }
  }
  return sum / static_cast<double>(n);
}

double rmse(const ScalarField& s, const GroundTruth& g,
            const ValidMask& mask) {
  check_triplet(s, g, mask);
  double sum = 0.0;
  std::size_t n = 0;
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) {
      if (!mask.at(y, x)) {
        continue;
      }
      const double d = s.at(y, x) - static_cast<double>(g.at(y, x));
      sum += d * d;
      ++n;
    }
  }
  return std::sqrt(sum / static_cast<double>(n));
}

double cross_entropy(const ScalarField& s, const GroundTruth& g,
                     const ValidMask& mask) {
  check_triplet(s, g, mask);
  check_unit_range(s);
  double sum = 0.0;
  std::size_t n = 0;
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) {
      if (!mask.at(y, x)) {
        continue;
      }
      const double v =
          std::clamp(s.at(y, x), kCrossEntropyEps, 1.0 - kCrossEntropyEps);
      sum += g.at(y, x) ? std::log(v) : std::log(1.0 - v);
      ++n;
    }
  }
  return -sum / static_cast<double>(n);
}

MetricReport evaluate_all(const ScalarField& s, const GroundTruth& g,
                          const ValidMask& mask, int levels,
                          double beta_squared) {
  const PRCurve curve = pr_curve(s, g, mask, levels);
  MetricReport report;
  report.f_measure = f_measure(curve, beta_squared);
  report.max_precision = max_precision(curve);
  report.mean_pr = mean_pr(curve);
  report.auc = auc(curve);
  report.mae = mae(s, g, mask);
  report.rmse = rmse(s, g, mask);
  report.cross_entropy = cross_entropy(s, g, mask);
  report.beta_squared = beta_squared;
  return report;
}

MetricReport average_reports(std::span<const MetricReport> reports) {
  if (reports.empty()) {
    throw std::invalid_argument("cannot average zero reports");
  }
  MetricReport mean;
  mean.f_measure = mean.max_precision = mean.mean_pr = mean.auc = 0.0;
  mean.mae = mean.rmse = mean.cross_entropy = 0.0;
  for (const MetricReport& r : reports) {
    mean.f_measure += r.f_measure;
    mean.max_precision += r.max_precision;
    mean.mean_pr += r.mean_pr;
    mean.auc += r.auc;
    mean.mae += r.mae;
    mean.rmse += r.rmse;
    mean.cross_entropy += r.cross_entropy;
  }
  const double n = static_cast<double>(reports.size());
  mean.f_measure /= n;
  mean.max_precision /= n;
  mean.mean_pr /= n;
  mean.auc /= n;
  mean.mae /= n;
  mean.rmse /= n;
  mean.cross_entropy /= n;
  mean.beta_squared = reports.front().beta_squared;
  return mean;
}

}  // namespace gfc
