// Copyright 2026 The QVSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvss/naor.h"

#include <bit>
#include <numeric>
#include <sstream>

#include "parallel.h"
#include "qvss/error.h"
#include "qvss/protocol.h"

namespace qvss {
namespace {

BooleanShareMatrix ParityColumns(int n, int parity) {
  const int m = 1 << (n - 1);
  BooleanShareMatrix base(n, m);
  int col = 0;
  for (uint32_t v = 0; v < (1u << n); ++v) {
    if ((std::popcount(v) & 1) != parity) continue;
    for (int row = 0; row < n; ++row) {
      base.set(row, col, static_cast<uint8_t>((v >> (n - 1 - row)) & 1u));
    }
    ++col;
  }
  return base;
}

const char* YesNo(bool v) { return v ? "Yes" : "No"; }

}  // namespace

BooleanShareMatrix::BooleanShareMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    Throw(ErrorKind::kSize, "share matrix dimensions must be positive");
  }
  cells_.assign(static_cast<size_t>(rows) * cols, 0);
}

std::vector<uint8_t> BooleanShareMatrix::Column(int col) const {
  std::vector<uint8_t> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, col);
  return out;
}

BooleanShareMatrix BooleanShareMatrix::PermuteColumns(
    std::span<const int> order) const {
  if (order.size() != static_cast<size_t>(cols_)) {
    Throw(ErrorKind::kArgument, "permutation length does not match columns");
  }
  BooleanShareMatrix out(rows_, cols_);
  for (int c = 0; c < cols_; ++c) {
    for (int r = 0; r < rows_; ++r) out.set(r, c, at(r, order[c]));
  }
  return out;
}

MatrixSets BuildNnMatrixSets(int n) {
  if (n < 2 || n > kMaxBaselineParticipants) {
    Throw(ErrorKind::kArgument, "baseline supports 2 <= n <= " +
                                    std::to_string(kMaxBaselineParticipants) +
                                    ", got " + std::to_string(n));
  }
  MatrixSets sets;
  sets.n = n;
  sets.m = 1 << (n - 1);
  sets.white = ParityColumns(n, 0);
  sets.black = ParityColumns(n, 1);
  sets.threshold = sets.m;
  sets.relative_difference = {1, sets.m};
  return sets;
}

BooleanShareMatrix ClassicalSharePixel(Color color, const MatrixSets& sets,
                                       Rng& rng) {
  std::vector<int> order(sets.m);
  std::iota(order.begin(), order.end(), 0);
  for (int i = sets.m - 1; i > 0; --i) {
    const int k = static_cast<int>(UniformBelow(rng, static_cast<uint64_t>(i) + 1));
    std::swap(order[i], order[k]);
  }
  return sets.base(color).PermuteColumns(order);
}

StackResult StackAndWeight(const BooleanShareMatrix& matrix,
                           std::span<const int> rows) {
  if (rows.empty()) Throw(ErrorKind::kArgument, "nothing to stack");
  StackResult out;
  out.stacked.assign(matrix.cols(), 0);
  for (int r : rows) {
    if (r < 1 || r > matrix.rows()) {
      Throw(ErrorKind::kArgument, "row " + std::to_string(r) + " outside [1, " +
                                      std::to_string(matrix.rows()) + "]");
    }
    for (int c = 0; c < matrix.cols(); ++c) out.stacked[c] |= matrix.at(r - 1, c);
  }
  for (uint8_t v : out.stacked) out.weight += v;
  return out;
}

std::map<std::vector<uint8_t>, int> RestrictedColumnMultiset(
    const BooleanShareMatrix& matrix, std::span<const int> rows) {
  std::map<std::vector<uint8_t>, int> out;
  for (int c = 0; c < matrix.cols(); ++c) {
    std::vector<uint8_t> key;
    key.reserve(rows.size());
    for (int r : rows) {
      if (r < 1 || r > matrix.rows()) {
        Throw(ErrorKind::kArgument, "row " + std::to_string(r) + " out of range");
      }
      key.push_back(matrix.at(r - 1, c));
    }
    ++out[key];
  }
  return out;
}

SubpixelBlock BlockShape(int m) {
  const int log_m = std::countr_zero(static_cast<unsigned>(m));
  const uint32_t width = 1u << ((log_m + 1) / 2);
  return {width, static_cast<uint32_t>(m) / width};
}

std::vector<BinaryImage> ClassicalShareImage(const BinaryImage& image,
                                             const MatrixSets& sets,
                                             uint64_t seed, int workers) {
  const SubpixelBlock block = BlockShape(sets.m);
  const uint64_t w = uint64_t{image.width()} * block.width;
  const uint64_t h = uint64_t{image.height()} * block.height;
  if (w > kMaxImageSide || h > kMaxImageSide) {
    Throw(ErrorKind::kSize, "expanded share of " + std::to_string(w) + "x" +
                                std::to_string(h) + " exceeds the image cap");
  }
  std::vector<BinaryImage> shares(
      sets.n, BinaryImage(static_cast<uint32_t>(w), static_cast<uint32_t>(h)));
  internal::ForEachPixel(image.pixel_count(), workers, [&](size_t l) {
    Rng rng = MakeRng(DeriveSeed(seed, l));
    const BooleanShareMatrix s = ClassicalSharePixel(image.pixel(l), sets, rng);
    const uint32_t row0 = static_cast<uint32_t>((l - 1) / image.width()) * block.height;
    const uint32_t col0 = static_cast<uint32_t>((l - 1) % image.width()) * block.width;
    for (int i = 0; i < sets.n; ++i) {
      for (int k = 0; k < sets.m; ++k) {
        shares[i].set(row0 + k / block.width, col0 + k % block.width,
                      FromBit(s.at(i, k)));
      }
    }
  });
  return shares;
}

ClassicalRecovery ClassicalRecoverImage(std::span<const BinaryImage> shares,
                                        const MatrixSets& sets) {
  if (shares.empty()) Throw(ErrorKind::kArgument, "no shares to stack");
  const SubpixelBlock block = BlockShape(sets.m);
  const uint32_t w = shares[0].width();
  const uint32_t h = shares[0].height();
  for (const BinaryImage& s : shares) {
    if (s.width() != w || s.height() != h) {
      Throw(ErrorKind::kFormat, "share images differ in size");
    }
  }
  if (w % block.width != 0 || h % block.height != 0) {
    Throw(ErrorKind::kFormat, "share size is not a whole number of " +
                                  std::to_string(block.width) + "x" +
                                  std::to_string(block.height) + " blocks");
  }

  BinaryImage stacked(w, h);
  for (uint32_t r = 0; r < h; ++r) {
    for (uint32_t c = 0; c < w; ++c) {
      bool black = false;
      for (const BinaryImage& s : shares) black |= s.at(r, c) == Color::kBlack;
      stacked.set(r, c, FromBit(black));
    }
  }
  BinaryImage decoded(w / block.width, h / block.height);
  for (uint32_t r = 0; r < decoded.height(); ++r) {
    for (uint32_t c = 0; c < decoded.width(); ++c) {
      int weight = 0;
      for (uint32_t dr = 0; dr < block.height; ++dr) {
        for (uint32_t dc = 0; dc < block.width; ++dc) {
          weight += ToBit(stacked.at(r * block.height + dr, c * block.width + dc));
        }
      }
      decoded.set(r, c, FromBit(weight >= sets.threshold));
    }
  }
  return {std::move(stacked), std::move(decoded)};
}

ComparisonReport CompareSchemes(const BinaryImage& image, int n, uint64_t seed) {
  ComparisonReport report;
  report.n = n;
  report.original_pixels = image.pixel_count();

  {
    const MatrixSets sets = BuildNnMatrixSets(n);
    const auto shares = ClassicalShareImage(image, sets, seed, 1);
    const auto shares_parallel = ClassicalShareImage(image, sets, seed, 4);
    const ClassicalRecovery rec = ClassicalRecoverImage(shares, sets);
    SchemeEvidence& e = report.baseline;
    e.single_pixel_parallel = shares == shares_parallel;
    e.share_pixels = shares[0].pixel_count();
    e.expansion_factor = e.share_pixels / report.original_pixels;
    e.pixel_expansion = e.expansion_factor > 1;
    e.resolution_loss = !(rec.stacked == image);
    e.recovered_equals_original = rec.decoded == image;
  }
  {
    const Backend backend = n <= 10 ? Backend::kStatevector : Backend::kSampled;
    SharingResult seq = ShareImage(image, n, backend, seed, 1);
    SharingResult par = ShareImage(image, n, backend, seed, 4);
    const BinaryImage rec_seq = RecoverImage(seq.shares, seq.session, seed, 1);
    const BinaryImage rec_par = RecoverImage(par.shares, par.session, seed, 4);
    SchemeEvidence& e = report.quantum;
    e.single_pixel_parallel = seq.shares == par.shares && rec_seq == rec_par;
    e.share_pixels = seq.shares[0].pixel_count();
    e.expansion_factor = e.share_pixels / report.original_pixels;
    e.pixel_expansion = e.expansion_factor > 1;
    e.resolution_loss = !(rec_seq == image);
    e.recovered_equals_original = rec_seq == image;
  }
  return report;
}

std::string ComparisonReport::ToTable() const {
  std::ostringstream out;
  auto row = [&](const std::string& name, const std::string& a,
                 const std::string& b) {
    out << name << std::string(name.size() < 34 ? 34 - name.size() : 1, ' ')
        << a << std::string(a.size() < 22 ? 22 - a.size() : 1, ' ') << b << "\n";
  };
  row("property", "classical (n,n) VSS", "quantum VSS");
  row("Single-pixel parallel processing", YesNo(baseline.single_pixel_parallel),
      YesNo(quantum.single_pixel_parallel));
  row("Pixel expansion", YesNo(baseline.pixel_expansion),
      YesNo(quantum.pixel_expansion));
  row("The loss in resolution", YesNo(baseline.resolution_loss),
      YesNo(quantum.resolution_loss));
  out << "\n";
  row("n", std::to_string(n), std::to_string(n));
  row("original pixels", std::to_string(original_pixels),
      std::to_string(original_pixels));
  row("pixels per share", std::to_string(baseline.share_pixels),
      std::to_string(quantum.share_pixels));
  row("expansion factor", std::to_string(baseline.expansion_factor),
      std::to_string(quantum.expansion_factor));
  row("decoded image equals original",
      YesNo(baseline.recovered_equals_original),
      YesNo(quantum.recovered_equals_original));
  return out.str();
}

}  // namespace qvss
