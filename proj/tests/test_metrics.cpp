// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gfc/metrics.hpp"
#include "metric_oracle.hpp"
#include "test_util.hpp"

using namespace gfc;

namespace {

GroundTruth random_ground_truth(int h, int w, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(h) * w);
  for (auto& b : bits) {
    b = static_cast<std::uint8_t>(rng.next() & 1u);
  }
  // guarantee both classes
  bits.front() = 1;
  bits.back() = 0;
  return GroundTruth(h, w, std::move(bits));
}

ScalarField binary_field_of(const GroundTruth& g) {
  ScalarField f(g.height(), g.width(), 0.0);
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      f.at(y, x) = g.at(y, x) ? 1.0 : 0.0;
    }
  }
  return f;
}

void check_curve_matches_oracle(const ScalarField& s, const GroundTruth& g,
                                const ValidMask& mask, int levels) {
  const PRCurve curve = pr_curve(s, g, mask, levels);
  const auto oracle = test::oracle_curve(s, g, mask, levels);
  REQUIRE(curve.points.size() == oracle.size());
  for (std::size_t k = 0; k < oracle.size(); ++k) {
    CHECK(curve.points[k].threshold == oracle[k].threshold);
    CHECK(curve.points[k].precision == oracle[k].precision);
    CHECK(curve.points[k].recall == oracle[k].recall);
    CHECK(curve.points[k].false_rate == oracle[k].false_rate);
  }
}

/// Smooth [0,1] map: bilinear upsampling of a small random grid.
ScalarField smooth_random_field(int size, std::uint64_t seed) {
  const int coarse = 5;
  const ScalarField grid = test::random_field(coarse, coarse, seed);
  ScalarField out(size, size, 0.0);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double fy = static_cast<double>(y) / (size - 1) * (coarse - 1);
      const double fx = static_cast<double>(x) / (size - 1) * (coarse - 1);
      const int y0 = std::min(static_cast<int>(fy), coarse - 2);
      const int x0 = std::min(static_cast<int>(fx), coarse - 2);
      const double ty = fy - y0;
      const double tx = fx - x0;
      out.at(y, x) = (1 - ty) * ((1 - tx) * grid.at(y0, x0) +
                                 tx * grid.at(y0, x0 + 1)) +
                     ty * ((1 - tx) * grid.at(y0 + 1, x0) +
                           tx * grid.at(y0 + 1, x0 + 1));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("perfect predictor curve") {
  const GroundTruth g = random_ground_truth(8, 8, 1);
  const ScalarField s = binary_field_of(g);
  const ValidMask mask = ValidMask::all(8, 8);
  const PRCurve curve = pr_curve(s, g, mask, 256);
  for (const PrPoint& p : curve.points) {
    if (p.threshold > 0.0) {
      CHECK(p.precision == 1.0);
      CHECK(p.recall == 1.0);
      CHECK(p.false_rate == 0.0);
    } else {
      CHECK(p.recall == 1.0);
      CHECK(p.false_rate == 1.0);
    }
  }
}

TEST_CASE("hand-evaluated 2x2 curve point") {
  const ScalarField s(2, 2, {0.9, 0.4, 0.1, 0.0});
  const GroundTruth g(2, 2, {1, 1, 0, 0});
  // levels = 3 puts t = 0.5 on the grid: M = {1,0,0,0}
  const PRCurve curve = pr_curve(s, g, ValidMask::all(2, 2), 3);
  REQUIRE(curve.points.size() == 3);
  CHECK(curve.points[1].threshold == 0.5);
  CHECK(curve.points[1].precision == 1.0);
  CHECK(curve.points[1].recall == 0.5);
  CHECK(curve.points[1].false_rate == 0.0);
}

TEST_CASE("curve matches the brute-force recount oracle") {
  SplitMix64 seeds(17);
  for (int trial = 0; trial < 8; ++trial) {
    const ScalarField s = test::random_field(8, 8, seeds.next());
    const GroundTruth g = random_ground_truth(8, 8, seeds.next());
    ValidMask mask = ValidMask::all(8, 8);
    if (trial % 2 == 1) {  // nontrivial mask
      SplitMix64 rng(seeds.next());
      for (auto& f : mask.flags()) {
        f = static_cast<std::uint8_t>(rng.next() & 1u);
      }
      mask.flags()[0] = 1;
      mask.flags()[1] = 1;
    }
    const bool has_pos = [&] {
      for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
          if (mask.at(y, x) && g.at(y, x)) {
            return true;
          }
        }
      }
      return false;
    }();
    const bool has_neg = [&] {
      for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
          if (mask.at(y, x) && !g.at(y, x)) {
            return true;
          }
        }
      }
      return false;
    }();
    if (!has_pos || !has_neg) {
      continue;
    }
    check_curve_matches_oracle(s, g, mask, 256);
    check_curve_matches_oracle(s, g, mask, 51);
  }
}

TEST_CASE("curve is unchanged by flooring s to the threshold grid") {
  const int levels = 51;
  const ScalarField s = test::random_field(8, 8, 77);
  const GroundTruth g = random_ground_truth(8, 8, 78);
  const ValidMask mask = ValidMask::all(8, 8);

  ScalarField floored = s;
  for (double& v : floored.values()) {
    int k = static_cast<int>(v * (levels - 1));
    while (k + 1 < levels &&
           v >= static_cast<double>(k + 1) / (levels - 1)) {
      ++k;
    }
    while (k > 0 && v < static_cast<double>(k) / (levels - 1)) {
      --k;
    }
    v = static_cast<double>(k) / (levels - 1);
  }
  const PRCurve a = pr_curve(s, g, mask, levels);
  const PRCurve b = pr_curve(floored, g, mask, levels);
  for (int k = 0; k < levels; ++k) {
    CHECK(a.points[k].precision == b.points[k].precision);
    CHECK(a.points[k].recall == b.points[k].recall);
    CHECK(a.points[k].false_rate == b.points[k].false_rate);
  }
}

TEST_CASE("curve monotonicity and range invariants") {
  const ScalarField s = test::random_field(12, 9, 91);
  const GroundTruth g = random_ground_truth(12, 9, 92);
  const PRCurve curve = pr_curve(s, g, ValidMask::all(12, 9), 256);
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    const PrPoint& p = curve.points[k];
    CHECK(p.precision >= 0.0);
    CHECK(p.precision <= 1.0);
    CHECK(p.recall >= 0.0);
    CHECK(p.recall <= 1.0);
    CHECK(p.false_rate >= 0.0);
    CHECK(p.false_rate <= 1.0);
    if (k > 0) {
      CHECK(p.recall <= curve.points[k - 1].recall);
      CHECK(p.false_rate <= curve.points[k - 1].false_rate);
    }
  }
}

TEST_CASE("degenerate ground truth raises a metric error") {
  const ScalarField s = test::random_field(4, 4, 5);
  CHECK_THROWS_AS(
      pr_curve(s, GroundTruth(4, 4, std::vector<std::uint8_t>(16, 1)),
               ValidMask::all(4, 4), 256),
      MetricError);
  CHECK_THROWS_AS(
      pr_curve(s, GroundTruth(4, 4, std::vector<std::uint8_t>(16, 0)),
               ValidMask::all(4, 4), 256),
      MetricError);

  // mixed ground truth that degenerates under the mask
  GroundTruth g(4, 4, [] {
    std::vector<std::uint8_t> v(16, 0);
    v[0] = 1;
    return v;
  }());
  ValidMask mask(4, 4, 0);
  mask.at(0, 0) = 1;
  mask.at(0, 1) = 1;
  CHECK_NOTHROW(pr_curve(s, g, mask, 256));
  mask.at(0, 0) = 0;
  CHECK_THROWS_AS(pr_curve(s, g, mask, 256), MetricError);
}

TEST_CASE("input validation") {
  const ScalarField s = test::random_field(4, 4, 5);
  const GroundTruth g = random_ground_truth(4, 4, 6);
  CHECK_THROWS_AS(pr_curve(s, g, ValidMask::all(4, 4), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(pr_curve(s, random_ground_truth(4, 5, 6),
                           ValidMask::all(4, 4), 256),
                  ShapeError);
  CHECK_THROWS_AS(pr_curve(s, g, ValidMask(4, 4, 0), 256), MetricError);
  const ScalarField out_of_range(4, 4, 1.5);
  CHECK_THROWS_AS(pr_curve(out_of_range, g, ValidMask::all(4, 4), 256),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_measure(PRCurve{}), std::invalid_argument);
}

TEST_CASE("f-measure frozen values") {
  const GroundTruth g = random_ground_truth(8, 8, 7);
  const PRCurve perfect =
      pr_curve(binary_field_of(g), g, ValidMask::all(8, 8), 256);
  CHECK(f_measure(perfect, 0.3) == 1.0);

  PRCurve single;
  single.levels = 1;
  single.points.push_back({0.5, 1.0, 0.5, 0.0});
  // (1 + 0.3) * 1 * 0.5 / (0.3 * 1 + 0.5)
  CHECK(f_measure(single, 0.3) == doctest::Approx(0.8125).epsilon(1e-15));

  // dropping the best point cannot increase the max
  PRCurve curve;
  curve.levels = 3;
  curve.points = {{0.0, 0.4, 1.0, 1.0}, {0.5, 1.0, 0.9, 0.2},
                  {1.0, 1.0, 0.1, 0.0}};
  const double full = f_measure(curve, 0.3);
  PRCurve reduced = curve;
  reduced.points.erase(reduced.points.begin() + 1);
  CHECK(f_measure(reduced, 0.3) <= full);
}

TEST_CASE("max precision") {
  const GroundTruth g = random_ground_truth(8, 8, 9);
  const ScalarField s = binary_field_of(g);
  CHECK(max_precision(pr_curve(s, g, ValidMask::all(8, 8), 256)) == 1.0);

  // all-wrong predictor: s = 1 - g has zero precision at every positive
  // threshold
  ScalarField inverted = s;
  for (double& v : inverted.values()) {
    v = 1.0 - v;
  }
  const PRCurve wrong = pr_curve(inverted, g, ValidMask::all(8, 8), 256);
  for (const PrPoint& p : wrong.points) {
    if (p.threshold > 0.0) {
      CHECK(p.precision == 0.0);
    }
  }
}

TEST_CASE("mean PR frozen values") {
  PRCurve two;
  two.levels = 2;
  two.points = {{0.0, 0.5, 1.0, 1.0}, {1.0, 1.0, 0.0, 0.0}};
  CHECK(mean_pr(two) == doctest::Approx(0.75).epsilon(1e-15));

  const GroundTruth g = random_ground_truth(8, 8, 11);
  const PRCurve perfect =
      pr_curve(binary_field_of(g), g, ValidMask::all(8, 8), 256);
  CHECK(mean_pr(perfect) == 1.0);
}

TEST_CASE("auc frozen values") {
  const GroundTruth g = random_ground_truth(8, 8, 13);
  const PRCurve perfect =
      pr_curve(binary_field_of(g), g, ValidMask::all(8, 8), 256);
  CHECK(auc(perfect) == 1.0);

  // uninformative constant 0.5 with balanced ground truth: the curve
  // collapses to (0,0) and (1,1), whose trapezoid is exactly 0.5
  std::vector<std::uint8_t> half(64, 0);
  for (int i = 0; i < 32; ++i) {
    half[i] = 1;
  }
  const GroundTruth balanced(8, 8, std::move(half));
  const ScalarField constant(8, 8, 0.5);
  CHECK(auc(pr_curve(constant, balanced, ValidMask::all(8, 8), 256)) == 0.5);
}

TEST_CASE("curve scalars match the quadrature oracle") {
  SplitMix64 seeds(1001);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField s = test::random_field(8, 8, seeds.next());
    const GroundTruth g = random_ground_truth(8, 8, seeds.next());
    const ValidMask mask = ValidMask::all(8, 8);
    const PRCurve curve = pr_curve(s, g, mask, 256);
    const auto oracle = test::oracle_curve(s, g, mask, 256);
    CHECK(std::abs(f_measure(curve, 0.3) -
                   test::oracle_f_measure(oracle, 0.3)) <= 1e-12);
    CHECK(std::abs(max_precision(curve) -
                   test::oracle_max_precision(oracle)) <= 1e-12);
    CHECK(std::abs(mean_pr(curve) - test::oracle_mean_pr(oracle)) <= 1e-12);
    CHECK(std::abs(auc(curve) - test::oracle_auc(oracle)) <= 1e-12);
  }
}

TEST_CASE("pixel metrics frozen values") {
  const GroundTruth g = random_ground_truth(8, 8, 15);
  const ScalarField s = binary_field_of(g);
  const ValidMask mask = ValidMask::all(8, 8);

  CHECK(mae(s, g, mask) == 0.0);
  CHECK(rmse(s, g, mask) == 0.0);
  CHECK(cross_entropy(s, g, mask) ==
        doctest::Approx(-std::log(1.0 - 1e-7)).epsilon(1e-9));
  CHECK(cross_entropy(s, g, mask) < 1e-6);

  ScalarField inverted = s;
  for (double& v : inverted.values()) {
    v = 1.0 - v;
  }
  CHECK(mae(inverted, g, mask) == 1.0);

  // constant offset 0.1 from the truth
  ScalarField offset = s;
  for (double& v : offset.values()) {
    v = v == 1.0 ? 0.9 : 0.1;
  }
  CHECK(mae(offset, g, mask) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(rmse(offset, g, mask) == doctest::Approx(0.1).epsilon(1e-12));

  const ScalarField constant(8, 8, 0.5);
  CHECK(cross_entropy(constant, g, mask) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("pixel metrics match the summation oracle") {
  SplitMix64 seeds(2002);
  for (int trial = 0; trial < 10; ++trial) {
    const ScalarField s = test::random_field(8, 8, seeds.next());
    const GroundTruth g = random_ground_truth(8, 8, seeds.next());
    const ValidMask mask = ValidMask::all(8, 8);
    CHECK(std::abs(mae(s, g, mask) - test::oracle_mae(s, g, mask)) <= 1e-12);
    CHECK(std::abs(rmse(s, g, mask) - test::oracle_rmse(s, g, mask)) <= 1e-12);
    CHECK(std::abs(cross_entropy(s, g, mask) -
                   test::oracle_cross_entropy(s, g, mask)) <= 1e-12);
    CHECK(mae(s, g, mask) <= rmse(s, g, mask));
  }
}

TEST_CASE("masked-out pixels never affect any metric") {
  const ScalarField s = test::random_field(8, 8, 3003);
  const GroundTruth g = random_ground_truth(8, 8, 3004);
  ValidMask mask(8, 8, 1);
  SplitMix64 rng(3005);
  for (auto& f : mask.flags()) {
    f = static_cast<std::uint8_t>(rng.next_below(4) != 0);  // ~75% in
  }
  mask.flags()[0] = 1;
  mask.flags()[63] = 1;

  ScalarField s2 = s;
  std::vector<std::uint8_t> g2_bits(g.mask());
  for (int i = 0; i < 64; ++i) {
    if (!mask.flags()[i]) {
      s2.values()[i] = rng.next_unit();
      g2_bits[i] = static_cast<std::uint8_t>(rng.next() & 1u);
    }
  }
  const GroundTruth g2(8, 8, std::move(g2_bits));

  const MetricReport a = evaluate_all(s, g, mask);
  const MetricReport b = evaluate_all(s2, g2, mask);
  CHECK(a.f_measure == b.f_measure);
  CHECK(a.max_precision == b.max_precision);
  CHECK(a.mean_pr == b.mean_pr);
  CHECK(a.auc == b.auc);
  CHECK(a.mae == b.mae);
  CHECK(a.rmse == b.rmse);
  CHECK(a.cross_entropy == b.cross_entropy);
}

TEST_CASE("metrics are permutation invariant") {
  const ScalarField s = test::random_field(8, 8, 4004);
  const GroundTruth g = random_ground_truth(8, 8, 4005);
  const ValidMask mask = ValidMask::all(8, 8);

  std::vector<int> perm(64);
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(4006);
  for (int i = 63; i > 0; --i) {
    std::swap(perm[i], perm[rng.next_below(i + 1)]);
  }
  ScalarField ps(8, 8, 0.0);
  std::vector<std::uint8_t> pg(64);
  for (int i = 0; i < 64; ++i) {
    ps.values()[i] = s.values()[perm[i]];
    pg[i] = g.mask()[perm[i]];
  }

  const MetricReport a = evaluate_all(s, g, mask);
  const MetricReport b = evaluate_all(ps, GroundTruth(8, 8, std::move(pg)),
                                      mask);
  // curve metrics count the same integers, bit-identical
  CHECK(a.f_measure == b.f_measure);
  CHECK(a.max_precision == b.max_precision);
  CHECK(a.mean_pr == b.mean_pr);
  CHECK(a.auc == b.auc);
  // the pixel sums run in a different order, identical to roundoff
  CHECK(a.mae == doctest::Approx(b.mae).epsilon(1e-12));
  CHECK(a.rmse == doctest::Approx(b.rmse).epsilon(1e-12));
  CHECK(a.cross_entropy == doctest::Approx(b.cross_entropy).epsilon(1e-12));
}

TEST_CASE("51-level f-measure stays close to 256 levels on smooth maps") {
  SplitMix64 seeds(5005);
  for (int trial = 0; trial < 5; ++trial) {
    const ScalarField s = smooth_random_field(64, seeds.next());
    const GroundTruth g =
        GroundTruth::from_field(smooth_random_field(64, seeds.next()), 0.5);
    const ValidMask mask = ValidMask::all(64, 64);
    const double fm256 = f_measure(pr_curve(s, g, mask, 256), 0.3);
    const double fm51 = f_measure(pr_curve(s, g, mask, 51), 0.3);
    CHECK(std::abs(fm256 - fm51) <= 0.02);
  }
}

TEST_CASE("evaluate_all equals the individual operations bit-for-bit") {
  const ScalarField s = test::random_field(8, 8, 6006);
  const GroundTruth g = random_ground_truth(8, 8, 6007);
  const ValidMask mask = ValidMask::all(8, 8);
  const MetricReport r = evaluate_all(s, g, mask, 256, 0.3);
  const PRCurve curve = pr_curve(s, g, mask, 256);
  CHECK(r.f_measure == f_measure(curve, 0.3));
  CHECK(r.max_precision == max_precision(curve));
  CHECK(r.mean_pr == mean_pr(curve));
  CHECK(r.auc == auc(curve));
  CHECK(r.mae == mae(s, g, mask));
  CHECK(r.rmse == rmse(s, g, mask));
  CHECK(r.cross_entropy == cross_entropy(s, g, mask));
}

TEST_CASE("perfect predictor report") {
  const GroundTruth g = random_ground_truth(8, 8, 7007);
  const MetricReport r =
      evaluate_all(binary_field_of(g), g, ValidMask::all(8, 8));
  CHECK(r.f_measure == 1.0);
  CHECK(r.max_precision == 1.0);
  CHECK(r.mean_pr == 1.0);
  CHECK(r.auc == 1.0);
  CHECK(r.mae == 0.0);
  CHECK(r.rmse == 0.0);
}

TEST_CASE("report averaging") {
  MetricReport a;
  a.f_measure = 1.0;
  a.max_precision = 0.8;
  a.mean_pr = 0.6;
  a.auc = 1.0;
  a.mae = 0.2;
  a.rmse = 0.4;
  a.cross_entropy = 2.0;
  MetricReport b;
  b.f_measure = 0.0;
  b.max_precision = 0.4;
  b.mean_pr = 0.2;
  b.auc = 0.5;
  b.mae = 0.0;
  b.rmse = 0.0;
  b.cross_entropy = 1.0;
  const std::vector<MetricReport> reports{a, b};
  const MetricReport mean = average_reports(reports);
  CHECK(mean.f_measure == 0.5);
  CHECK(mean.max_precision == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(mean.mean_pr == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(mean.auc == 0.75);
  CHECK(mean.mae == 0.1);
  CHECK(mean.rmse == 0.2);
  CHECK(mean.cross_entropy == 1.5);
}
