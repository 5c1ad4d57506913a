// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "gfc/field.hpp"
#include "gfc/green.hpp"

namespace gfc {

/// 3x3 stencil whose convolution defines the Laplacian being inverted
/// (center +4, cross neighbors -1; entries sum to 0).
inline constexpr std::array<std::array<double, 3>, 3> kLaplacianKernel = {
    {{0.0, -1.0, 0.0}, {-1.0, 4.0, -1.0}, {0.0, -1.0, 0.0}}};

/// Border margin of the padded solve path.
inline constexpr int kSolvePadMargin = 4;

/// Convolution with kLaplacianKernel, zero boundary extension.
ScalarField image_laplacian(const ScalarField& image);

/// Convolution with kLaplacianKernel, periodic (circular) boundary.
ScalarField image_laplacian_circular(const ScalarField& image);

/// Forward-difference gradient with zero extension past the last
/// row/column: ex(y,x) = I(y,x+1) - I(y,x), ey(y,x) = I(y+1,x) - I(y,x).
VectorField forward_gradient(const ScalarField& image);

/// Negated backward-difference divergence, out-of-range neighbors 0:
///
///   L(y,x) = -[ex(y,x) - ex(y,x-1)] - [ey(y,x) - ey(y-1,x)]
///
/// Paired with forward_gradient so that divergence(forward_gradient(I))
/// equals image_laplacian(I) exactly when I is zero on its 1-pixel border.
ScalarField divergence(const VectorField& field);

/// divergence over raw row-major component planes of identical dims;
/// lets batch callers skip the interim VectorField copies.
ScalarField divergence_planes(const double* ex, const double* ey, int height,
                              int width);

/// Transpose of divergence. The negation already sits inside the
/// divergence stencil, so the transpose of the whole map is the plain
/// forward-difference gradient.
VectorField divergence_adjoint(const ScalarField& field);

/// Inverts the kLaplacianKernel convolution by spectral multiplication
/// with the cached Green operator.
///
/// With pad_margin > 0 (default 4): zero-pad, multiply the padded
/// spectrum, inverse-transform and take the real part, subtract the
/// integration constant c estimated as the mean over the padded border
/// band, then crop back to the input size. With pad_margin == 0 the solve
/// runs at the native size with periodic wrap-around and subtracts the
/// full-field mean instead (there is no padded band); use this path when
/// the right-hand side was produced with circular boundaries.
ScalarField solve_laplacian(const ScalarField& lap, GreenOperatorCache& cache,
                            int pad_margin = kSolvePadMargin);

/// Transpose of solve_laplacian: the pad/crop and c-subtraction steps
/// transposed explicitly, the spectral multiply done with the conjugate
/// spectrum.
ScalarField solve_laplacian_adjoint(const ScalarField& field,
                                    GreenOperatorCache& cache,
                                    int pad_margin = kSolvePadMargin);

/// solve_laplacian(divergence(field)) on the padded path. Defined for
/// non-conservative fields; the spectral solve absorbs the inconsistent
/// part in a least-squares-like way.
ScalarField integrate_gradient(const VectorField& field,
                               GreenOperatorCache& cache);

/// Transpose of integrate_gradient.
VectorField integrate_gradient_adjoint(const ScalarField& field,
                                       GreenOperatorCache& cache);

}  // namespace gfc
