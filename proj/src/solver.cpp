// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/solver.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

#include "gfc/fft.hpp"

namespace gfc {

namespace {

double at_or_zero(const ScalarField& f, int y, int x) {
  if (y < 0 || y >= f.height() || x < 0 || x >= f.width()) {
    return 0.0;
  }
  return f.at(y, x);
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

// Sum over the margin-wide border band of a padded grid.
double band_sum(const ScalarField& f, int margin) {
  double sum = 0.0;
  for (int y = 0; y < f.height(); ++y) {
    const bool edge_row = y < margin || y >= f.height() - margin;
    if (edge_row) {
      for (int x = 0; x < f.width(); ++x) {
        sum += f.at(y, x);
      }
    } else {
      for (int x = 0; x < margin; ++x) {
        sum += f.at(y, x);
      }
      for (int x = f.width() - margin; x < f.width(); ++x) {
        sum += f.at(y, x);
      }
    }
  }
  return sum;
}

std::size_t band_count(int height, int width, int margin) {
  const std::size_t total = static_cast<std::size_t>(height) * width;
  const std::size_t interior =
      static_cast<std::size_t>(height - 2 * margin) * (width - 2 * margin);
  return total - interior;
}

// Spectral multiply by op.spectrum (or its conjugate), real inverse.
ScalarField apply_spectrum(const ScalarField& input, const GreenOperator& op,
                           bool conjugate) {
  const int h = input.height();
  const int w = input.width();
  const std::size_t bins = static_cast<std::size_t>(h) * fft::spectral_width(w);
  std::vector<std::complex<double>> hat(bins);
  fft::rfft2(h, w, input.data(), hat.data());
  for (std::size_t i = 0; i < bins; ++i) {
    hat[i] *= conjugate ? std::conj(op.spectrum[i]) : op.spectrum[i];
  }
  ScalarField out(h, w, 0.0);
  fft::irfft2_destructive(h, w, hat.data(), out.data());
  return out;
}

void check_margin(int pad_margin) {
  if (pad_margin < 0) {
    throw std::invalid_argument("pad margin must be >= 0");
  }
}

}  // namespace

ScalarField image_laplacian(const ScalarField& image) {
  ScalarField out(image.height(), image.width(), 0.0);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      out.at(y, x) = 4.0 * image.at(y, x) - at_or_zero(image, y - 1, x) -
                     at_or_zero(image, y + 1, x) - at_or_zero(image, y, x - 1) -
                     at_or_zero(image, y, x + 1);
    }
  }
  return out;
}

ScalarField image_laplacian_circular(const ScalarField& image) {
  const int h = image.height();
  const int w = image.width();
  ScalarField out(h, w, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.at(y, x) = 4.0 * image.at(y, x) - image.at(wrap(y - 1, h), x) -
                     image.at(wrap(y + 1, h), x) - image.at(y, wrap(x - 1, w)) -
                     image.at(y, wrap(x + 1, w));
    }
  }
  return out;
}

VectorField forward_gradient(const ScalarField& image) {
  const int h = image.height();
  const int w = image.width();
  ScalarField ex(h, w, 0.0);
  ScalarField ey(h, w, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      ex.at(y, x) = at_or_zero(image, y, x + 1) - image.at(y, x);
      ey.at(y, x) = at_or_zero(image, y + 1, x) - image.at(y, x);
    }
  }
  return VectorField(std::move(ex), std::move(ey));
}

ScalarField divergence(const VectorField& field) {
  if (!field.ex.same_shape(field.ey)) {
    throw ShapeError("divergence: ex and ey dimensions differ");
  }
  return divergence_planes(field.ex.data(), field.ey.data(), field.height(),
                           field.width());
}

ScalarField divergence_planes(const double* ex, const double* ey, int height,
                              int width) {
  ScalarField out(height, width, 0.0);
  for (int y = 0; y < height; ++y) {
    const double* ex_row = ex + static_cast<std::size_t>(y) * width;
    const double* ey_row = ey + static_cast<std::size_t>(y) * width;
    const double* ey_up =
        y > 0 ? ey_row - width : nullptr;
    double* out_row = out.data() + static_cast<std::size_t>(y) * width;
    for (int x = 0; x < width; ++x) {
      const double dx = ex_row[x] - (x > 0 ? ex_row[x - 1] : 0.0);
      const double dy = ey_row[x] - (ey_up ? ey_up[x] : 0.0);
      out_row[x] = -dx - dy;
    }
  }
  return out;
}

VectorField divergence_adjoint(const ScalarField& field) {
  return forward_gradient(field);
}

ScalarField solve_laplacian(const ScalarField& lap, GreenOperatorCache& cache,
                            int pad_margin) {
  check_margin(pad_margin);
  const ScalarField padded = zero_pad(lap, pad_margin);
  const auto op = cache.get(padded.height(), padded.width());
  ScalarField solved = apply_spectrum(padded, *op, /*conjugate=*/false);

  double c;
  if (pad_margin > 0) {
    c = band_sum(solved, pad_margin) /
        static_cast<double>(
            band_count(solved.height(), solved.width(), pad_margin));
  } else {
    c = solved.mean();
  }
  for (double& v : solved.values()) {
    v -= c;
  }
  return crop_pad(solved, pad_margin);
}

ScalarField solve_laplacian_adjoint(const ScalarField& field,
                                    GreenOperatorCache& cache,
                                    int pad_margin) {
  check_margin(pad_margin);
  // Transpose of crop is zero-embed; transpose of "subtract the band mean
  // from every pixel" subtracts total_sum/band_count from band pixels only.
  ScalarField embedded = zero_pad(field, pad_margin);
  const int h = embedded.height();
  const int w = embedded.width();
  double total = 0.0;
  for (double v : embedded.values()) {
    total += v;
  }
  if (pad_margin > 0) {
    const double share =
        total / static_cast<double>(band_count(h, w, pad_margin));
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const bool in_band = y < pad_margin || y >= h - pad_margin ||
                             x < pad_margin || x >= w - pad_margin;
        if (in_band) {
          embedded.at(y, x) -= share;
        }
      }
    }
  } else {
    const double share = total / static_cast<double>(embedded.size());
    for (double& v : embedded.values()) {
      v -= share;
    }
  }
  const auto op = cache.get(h, w);
  ScalarField solved = apply_spectrum(embedded, *op, /*conjugate=*/true);
  return crop_pad(solved, pad_margin);
}

ScalarField integrate_gradient(const VectorField& field,
                               GreenOperatorCache& cache) {
  return solve_laplacian(divergence(field), cache, kSolvePadMargin);
}

VectorField integrate_gradient_adjoint(const ScalarField& field,
                                       GreenOperatorCache& cache) {
  return divergence_adjoint(
      solve_laplacian_adjoint(field, cache, kSolvePadMargin));
}

}  // namespace gfc
