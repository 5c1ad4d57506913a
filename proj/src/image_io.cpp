// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace gfc {

namespace {

// Skips whitespace and '#' comment lines between PGM header tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

long read_header_int(std::istream& in, const std::filesystem::path& path) {
  skip_separators(in);
  long value = -1;
  if (!(in >> value)) {
    throw IoError("malformed PGM header in " + path.string());
  }
  return value;
}

}  // namespace

ScalarField load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw IoError("unsupported image format (expected binary PGM P5): " +
                  path.string());
  }
  const long width = read_header_int(in, path);
  const long height = read_header_int(in, path);
  const long maxval = read_header_int(in, path);
  if (width <= 0 || height <= 0) {
    throw IoError("zero-sized image: " + path.string());
  }
  if (maxval < 1 || maxval > 255) {
    throw IoError("unsupported PGM maxval " + std::to_string(maxval) +
                  " (only 8-bit supported): " + path.string());
  }
  in.get();  // single separator byte after maxval
  std::vector<unsigned char> bytes(static_cast<std::size_t>(width) * height);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) {
    throw IoError("truncated PGM payload: " + path.string());
  }
  std::vector<double> values(bytes.size());
  std::transform(bytes.begin(), bytes.end(), values.begin(),
                 [](unsigned char b) { return static_cast<double>(b) / 255.0; });
  return ScalarField(static_cast<int>(height), static_cast<int>(width),
                     std::move(values));
}

std::uint8_t quantize_byte(double value) {
  const double clamped = std::clamp(value, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::floor(clamped * 255.0 + 0.5));
}

void save_image(const ScalarField& field, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << "P5\n" << field.width() << " " << field.height() << "\n255\n";
  std::vector<unsigned char> bytes(field.size());
  std::transform(field.values().begin(), field.values().end(), bytes.begin(),
                 [](double v) { return quantize_byte(v); });
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

}  // namespace gfc
