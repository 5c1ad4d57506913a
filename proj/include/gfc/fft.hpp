// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

namespace gfc::fft {

/// Number of complex bins per row of the r2c half-spectrum.
inline int spectral_width(int width) { return width / 2 + 1; }

/// Forward real-to-complex 2-D DFT of a row-major height x width grid.
/// `out` holds height * (width/2 + 1) bins, unnormalized.
void rfft2(int height, int width, const double* in, std::complex<double>* out);

/// Inverse complex-to-real 2-D DFT. Normalized by 1/(height*width) so
/// irfft2(rfft2(x)) == x. `in` is copied internally and left untouched.
void irfft2(int height, int width, const std::complex<double>* in,
            double* out);

/// As irfft2 but clobbers `in` (the c2r transform destroys its input).
void irfft2_destructive(int height, int width, std::complex<double>* in,
                        double* out);

}  // namespace gfc::fft
