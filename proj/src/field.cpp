// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gfc {

namespace {

void check_dims(int height, int width) {
  if (height < 1 || width < 1) {
    throw ShapeError("field dimensions must be >= 1, got " +
                     std::to_string(height) + "x" + std::to_string(width));
  }
}

void check_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) +
                                  " contains a non-finite value");
    }
  }
}

}  // namespace

ScalarField::ScalarField(int height, int width, double fill)
    : height_(height), width_(width) {
  check_dims(height, width);
  if (!std::isfinite(fill)) {
    throw std::invalid_argument("fill value is not finite");
  }
  values_.assign(static_cast<std::size_t>(height) * width, fill);
}

ScalarField::ScalarField(int height, int width, std::vector<double> values)
    : height_(height), width_(width), values_(std::move(values)) {
  check_dims(height, width);
  if (values_.size() != static_cast<std::size_t>(height) * width) {
    throw ShapeError("value count " + std::to_string(values_.size()) +
                     " does not match " + std::to_string(height) + "x" +
                     std::to_string(width));
  }
  check_finite(values_, "ScalarField");
}

double ScalarField::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

double ScalarField::mean() const {
  double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  return sum / static_cast<double>(values_.size());
}

bool ScalarField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

VectorField::VectorField(ScalarField x_part, ScalarField y_part)
    : ex(std::move(x_part)), ey(std::move(y_part)) {
  if (!ex.same_shape(ey)) {
    throw ShapeError("vector field components differ in shape");
  }
}

FeatureBatch::FeatureBatch(int items, int channels, int height, int width,
                           double fill)
    : items_(items), channels_(channels), height_(height), width_(width) {
  if (items < 1 || channels < 1) {
    throw ShapeError("batch needs >= 1 item and >= 1 channel");
  }
  check_dims(height, width);
  values_.assign(static_cast<std::size_t>(items) * channels * height * width,
                 fill);
}

FeatureBatch::FeatureBatch(int items, int channels, int height, int width,
                           std::vector<double> values)
    : items_(items),
      channels_(channels),
      height_(height),
      width_(width),
      values_(std::move(values)) {
  if (items < 1 || channels < 1) {
    throw ShapeError("batch needs >= 1 item and >= 1 channel");
  }
  check_dims(height, width);
  const std::size_t expected =
      static_cast<std::size_t>(items) * channels * height * width;
  if (values_.size() != expected) {
    throw ShapeError("tensor value count does not match N*C*H*W");
  }
  check_finite(values_, "FeatureBatch");
}

ScalarField FeatureBatch::channel_field(int item, int channel) const {
  const double* src = channel_data(item, channel);
  return ScalarField(
      height_, width_,
      std::vector<double>(src, src + static_cast<std::size_t>(height_) *
                                         width_));
}

void FeatureBatch::set_channel(int item, int channel,
                               const ScalarField& field) {
  if (field.height() != height_ || field.width() != width_) {
    throw ShapeError("channel plane dimensions do not match batch");
  }
  std::copy(field.values().begin(), field.values().end(),
            values_.begin() + channel_offset(item, channel));
}

bool FeatureBatch::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

ValidMask::ValidMask(int height, int width, std::uint8_t fill)
    : height_(height), width_(width) {
  check_dims(height, width);
  flags_.assign(static_cast<std::size_t>(height) * width, fill ? 1 : 0);
}

std::size_t ValidMask::count() const {
  return static_cast<std::size_t>(
      std::count(flags_.begin(), flags_.end(), std::uint8_t{1}));
}

ScalarField zero_pad(const ScalarField& field, int margin) {
  if (margin < 0) {
    throw std::invalid_argument("pad margin must be >= 0");
  }
  if (margin == 0) {
    return field;
  }
  ScalarField out(field.height() + 2 * margin, field.width() + 2 * margin,
                  0.0);
  for (int y = 0; y < field.height(); ++y) {
    const double* src = field.data() + static_cast<std::size_t>(y) *
                                           field.width();
    double* dst = out.data() +
                  static_cast<std::size_t>(y + margin) * out.width() + margin;
    std::copy(src, src + field.width(), dst);
  }
  return out;
}

ScalarField crop_pad(const ScalarField& field, int margin) {
  if (margin < 0) {
    throw std::invalid_argument("crop margin must be >= 0");
  }
  if (margin == 0) {
    return field;
  }
  const int out_h = field.height() - 2 * margin;
  const int out_w = field.width() - 2 * margin;
  if (out_h < 1 || out_w < 1) {
    throw ShapeError("crop margin " + std::to_string(margin) +
                     " too large for " + std::to_string(field.height()) + "x" +
                     std::to_string(field.width()) + " field");
  }
  ScalarField out(out_h, out_w, 0.0);
  for (int y = 0; y < out_h; ++y) {
    const double* src = field.data() +
                        static_cast<std::size_t>(y + margin) * field.width() +
                        margin;
    std::copy(src, src + out_w,
              out.data() + static_cast<std::size_t>(y) * out_w);
  }
  return out;
}

}  // namespace gfc
