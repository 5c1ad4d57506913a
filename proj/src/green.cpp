// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/green.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "gfc/field.hpp"

namespace gfc {

GreenOperator build_green_operator(int height, int width) {
  if (height < 3 || width < 3) {
    throw ShapeError("green operator needs >= 3x3 grid to embed the kernel, "
                     "got " +
                     std::to_string(height) + "x" + std::to_string(width));
  }
  const std::size_t real_count = static_cast<std::size_t>(height) * width;
  const std::size_t cplx_count =
      static_cast<std::size_t>(height) * fft::spectral_width(width);

  std::vector<double> dirac(real_count, 0.0);
  dirac[static_cast<std::size_t>(1) * width + 1] = 1.0;

  std::vector<double> kernel(real_count, 0.0);
  kernel[static_cast<std::size_t>(0) * width + 1] = -1.0;
  kernel[static_cast<std::size_t>(1) * width + 0] = -1.0;
  kernel[static_cast<std::size_t>(1) * width + 1] = 4.0;
  kernel[static_cast<std::size_t>(1) * width + 2] = -1.0;
  kernel[static_cast<std::size_t>(2) * width + 1] = -1.0;

  std::vector<std::complex<double>> dirac_hat(cplx_count);
  std::vector<std::complex<double>> kernel_hat(cplx_count);
  fft::rfft2(height, width, dirac.data(), dirac_hat.data());
  fft::rfft2(height, width, kernel.data(), kernel_hat.data());

  GreenOperator op;
  op.height = height;
  op.width = width;
  op.spectrum.resize(cplx_count);
  for (std::size_t i = 0; i < cplx_count; ++i) {
    op.spectrum[i] = dirac_hat[i] / kernel_hat[i];
  }
  // The kernel annihilates constants, so its DC bin is 0; the mean-free
  // solution takes 0 there instead of the undefined quotient.
  op.spectrum[0] = {0.0, 0.0};
  return op;
}

std::shared_ptr<const GreenOperator> GreenOperatorCache::get(int height,
                                                             int width) {
  const std::uint64_t key = (static_cast<std::uint64_t>(height) << 32) |
                            static_cast<std::uint32_t>(width);
  {
    std::shared_lock lock(mutex_);
    auto it = operators_.find(key);
    if (it != operators_.end()) {
      return it->second;
    }
  }
  auto built = std::make_shared<const GreenOperator>(
      build_green_operator(height, width));
  std::unique_lock lock(mutex_);
  // Another thread may have inserted meanwhile; keep the first entry.
  auto [it, inserted] = operators_.emplace(key, std::move(built));
  return it->second;
}

std::size_t GreenOperatorCache::size() const {
  std::shared_lock lock(mutex_);
  return operators_.size();
}

}  // namespace gfc
