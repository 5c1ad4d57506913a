// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/tensor_io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace gfc {

namespace {

constexpr char kMagic[8] = {'G', 'F', 'C', 'T', 'N', 'S', 'R', '1'};
constexpr std::uint64_t kMaxRank = 8;
constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 34;

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> b;
  for (int i = 0; i < 8; ++i) {
    b[i] = static_cast<unsigned char>(v >> (8 * i));
  }
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t get_u64(std::istream& in, const std::filesystem::path& path) {
  std::array<unsigned char, 8> b;
  in.read(reinterpret_cast<char*>(b.data()), 8);
  if (!in) {
    throw IoError("truncated tensor header: " + path.string());
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  }
  return v;
}

}  // namespace

Tensor load_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0) {
    throw IoError("not a gfc tensor file: " + path.string());
  }
  const std::uint64_t rank = get_u64(in, path);
  if (rank < 1 || rank > kMaxRank) {
    throw IoError("tensor rank " + std::to_string(rank) + " out of range: " +
                  path.string());
  }
  Tensor t;
  t.dims.resize(rank);
  std::uint64_t total = 1;
  for (auto& d : t.dims) {
    d = get_u64(in, path);
    if (d == 0 || total > kMaxElements / d) {
      throw IoError("invalid tensor dimensions: " + path.string());
    }
    total *= d;
  }
  t.values.resize(total);
  for (auto& v : t.values) {
    v = std::bit_cast<double>(get_u64(in, path));
    if (!std::isfinite(v)) {
      throw IoError("tensor contains a non-finite value: " + path.string());
    }
  }
  in.peek();
  if (!in.eof()) {
    throw IoError("trailing bytes after tensor payload: " + path.string());
  }
  return t;
}

void save_tensor(const Tensor& tensor, const std::filesystem::path& path) {
  std::uint64_t total = 1;
  for (auto d : tensor.dims) {
    total *= d;
  }
  if (tensor.dims.empty() || total != tensor.values.size()) {
    throw ShapeError("tensor dims do not match value count");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out.write(kMagic, 8);
  put_u64(out, tensor.dims.size());
  for (auto d : tensor.dims) {
    put_u64(out, d);
  }
  for (double v : tensor.values) {
    put_u64(out, std::bit_cast<std::uint64_t>(v));
  }
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

ScalarField load_tensor_field(const std::filesystem::path& path) {
  Tensor t = load_tensor(path);
  if (t.dims.size() != 2) {
    throw IoError("expected rank-2 tensor (H, W) in " + path.string() +
                  ", got rank " + std::to_string(t.dims.size()));
  }
  return ScalarField(static_cast<int>(t.dims[0]), static_cast<int>(t.dims[1]),
                     std::move(t.values));
}

void save_tensor_field(const ScalarField& field,
                       const std::filesystem::path& path) {
  Tensor t;
  t.dims = {static_cast<std::uint64_t>(field.height()),
            static_cast<std::uint64_t>(field.width())};
  t.values = field.values();
  save_tensor(t, path);
}

FeatureBatch load_tensor_batch(const std::filesystem::path& path) {
  Tensor t = load_tensor(path);
  if (t.dims.size() != 4) {
    throw IoError("expected rank-4 tensor (N, C, H, W) in " + path.string() +
                  ", got rank " + std::to_string(t.dims.size()));
  }
  return FeatureBatch(static_cast<int>(t.dims[0]), static_cast<int>(t.dims[1]),
                      static_cast<int>(t.dims[2]), static_cast<int>(t.dims[3]),
                      std::move(t.values));
}

void save_tensor_batch(const FeatureBatch& batch,
                       const std::filesystem::path& path) {
  Tensor t;
  t.dims = {static_cast<std::uint64_t>(batch.items()),
            static_cast<std::uint64_t>(batch.channels()),
            static_cast<std::uint64_t>(batch.height()),
            static_cast<std::uint64_t>(batch.width())};
  t.values = batch.values();
  save_tensor(t, path);
}

}  // namespace gfc
