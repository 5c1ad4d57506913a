// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "gfc/field.hpp"

namespace gfc {

/// Reads a binary portable graymap (P5, maxval <= 255) and scales the
/// 8-bit samples to [0,1] by dividing by 255.
ScalarField load_image(const std::filesystem::path& path);

/// Writes a binary P5 graymap with maxval 255. Values are clamped to
/// [0,1] and quantized as round(value * 255), round-half-up, so writing
/// is byte-stable: save(load(save(f))) == save(f).
void save_image(const ScalarField& field, const std::filesystem::path& path);

/// The quantization rule used by save_image, exposed for tests.
std::uint8_t quantize_byte(double value);

}  // namespace gfc
