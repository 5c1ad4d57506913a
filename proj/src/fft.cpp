// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/fft.hpp"

#include <fftw3.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace gfc::fft {

namespace {

// FFTW planning is not thread-safe; plan execution on distinct buffers is.
// Plans are created once per grid size with FFTW_UNALIGNED so the new-array
// execute functions accept any caller buffer, and kept for process lifetime.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

PlanPair& plans_for(int height, int width) {
  static std::map<std::uint64_t, PlanPair> registry;
  const std::uint64_t key =
      (static_cast<std::uint64_t>(height) << 32) | static_cast<std::uint32_t>(width);
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = registry.find(key);
  if (it != registry.end()) {
    return it->second;
  }
  const std::size_t real_count = static_cast<std::size_t>(height) * width;
  const std::size_t cplx_count =
      static_cast<std::size_t>(height) * spectral_width(width);
  std::vector<double> real_buf(real_count);
  std::vector<std::complex<double>> cplx_buf(cplx_count);
  PlanPair pair;
  pair.forward = fftw_plan_dft_r2c_2d(
      height, width, real_buf.data(),
      reinterpret_cast<fftw_complex*>(cplx_buf.data()),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  pair.inverse = fftw_plan_dft_c2r_2d(
      height, width, reinterpret_cast<fftw_complex*>(cplx_buf.data()),
      real_buf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  return registry.emplace(key, pair).first->second;
}

}  // namespace

void rfft2(int height, int width, const double* in,
           std::complex<double>* out) {
  PlanPair& pair = plans_for(height, width);
  // r2c with FFTW_ESTIMATE does not modify its input.
  fftw_execute_dft_r2c(pair.forward, const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void irfft2(int height, int width, const std::complex<double>* in,
            double* out) {
  // c2r destroys its input, so run on a scratch copy.
  std::vector<std::complex<double>> scratch(
      in, in + static_cast<std::size_t>(height) * spectral_width(width));
  irfft2_destructive(height, width, scratch.data(), out);
}

void irfft2_destructive(int height, int width, std::complex<double>* in,
                        double* out) {
  PlanPair& pair = plans_for(height, width);
  fftw_execute_dft_c2r(pair.inverse, reinterpret_cast<fftw_complex*>(in),
                       out);
  const double scale = 1.0 / (static_cast<double>(height) * width);
  const std::size_t count = static_cast<std::size_t>(height) * width;
  for (std::size_t i = 0; i < count; ++i) {
    out[i] *= scale;
  }
}

}  // namespace gfc::fft
