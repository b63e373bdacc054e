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

/**
 * @file
 * Classical (n, n) visual secret sharing with pixel expansion.
 *
 * Each pixel becomes an n x m Boolean matrix, m = 2^(n-1). Row i is the
 * block of m subpixels printed on transparency i. White pixels draw a
 * column permutation of the matrix whose columns are all even-weight
 * n-bit vectors; black pixels use the odd-weight vectors. Stacking all n
 * transparencies ORs the rows: a white pixel keeps exactly one clear
 * subpixel (weight m-1), a black one turns fully dark (weight m).
 *
 * The sets C0 and C1 hold m! matrices each and are never materialized;
 * a set is its base matrix plus "any column permutation".
 */

#ifndef QVSS_NAOR_H_
#define QVSS_NAOR_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qvss/image.h"
#include "qvss/rng.h"

namespace qvss {

inline constexpr int kMaxBaselineParticipants = 12;

class BooleanShareMatrix {
 public:
  BooleanShareMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// Zero-based row and column.
  uint8_t at(int row, int col) const { return cells_[Index(row, col)]; }
  void set(int row, int col, uint8_t v) { cells_[Index(row, col)] = v & 1u; }

  std::vector<uint8_t> Column(int col) const;
  BooleanShareMatrix PermuteColumns(std::span<const int> order) const;

  friend bool operator==(const BooleanShareMatrix&, const BooleanShareMatrix&) = default;
  friend auto operator<=>(const BooleanShareMatrix&, const BooleanShareMatrix&) = default;

 private:
  size_t Index(int row, int col) const {
    return static_cast<size_t>(row) * cols_ + col;
  }
  int rows_;
  int cols_;
  std::vector<uint8_t> cells_;
};

struct Rational {
  int64_t num;
  int64_t den;
};

struct MatrixSets {
  int n = 0;
  int m = 0;                 // subpixels per pixel
  BooleanShareMatrix white{1, 1};  // C0 base: even-weight columns, ascending
  BooleanShareMatrix black{1, 1};  // C1 base: odd-weight columns, ascending
  int threshold = 0;         // d: stacked weight >= d reads as black
  Rational relative_difference{0, 1};  // alpha, with alpha * m = 1

  const BooleanShareMatrix& base(Color c) const {
    return c == Color::kBlack ? black : white;
  }
};

MatrixSets BuildNnMatrixSets(int n);

/// A uniformly random member of C0 (white) or C1 (black).
BooleanShareMatrix ClassicalSharePixel(Color color, const MatrixSets& sets,
                                       Rng& rng);

struct StackResult {
  std::vector<uint8_t> stacked;  // OR of the selected rows
  int weight = 0;                // Hamming weight of `stacked`
};

/// ORs the given one-based rows.
StackResult StackAndWeight(const BooleanShareMatrix& matrix,
                           std::span<const int> rows);

/// Multiset of the columns of `matrix` restricted to one-based `rows`. Two
/// matrices with equal restricted column multisets produce identical
/// multisets of restricted matrices over all column permutations.
std::map<std::vector<uint8_t>, int> RestrictedColumnMultiset(
    const BooleanShareMatrix& matrix, std::span<const int> rows);

/// Layout of the m subpixels of a pixel inside a share image: a
/// block_width x block_height block filled row-major.
struct SubpixelBlock {
  uint32_t width;
  uint32_t height;
};
SubpixelBlock BlockShape(int m);

/// One expanded share image per participant.
std::vector<BinaryImage> ClassicalShareImage(const BinaryImage& image,
                                             const MatrixSets& sets,
                                             uint64_t seed, int workers = 1);

struct ClassicalRecovery {
  BinaryImage stacked;  // expanded, what the eye sees
  BinaryImage decoded;  // original resolution, block weight >= d is black
};

/// Stacks one or more share images of the same size.
ClassicalRecovery ClassicalRecoverImage(std::span<const BinaryImage> shares,
                                        const MatrixSets& sets);

struct SchemeEvidence {
  bool single_pixel_parallel = false;  // outputs identical for 1 and 4 workers
  bool pixel_expansion = false;
  bool resolution_loss = false;
  uint64_t share_pixels = 0;    // pixels (or payload entries) in one share
  uint64_t expansion_factor = 0;
  bool recovered_equals_original = false;
};

struct ComparisonReport {
  int n = 0;
  uint64_t original_pixels = 0;
  SchemeEvidence baseline;
  SchemeEvidence quantum;

  std::string ToTable() const;
};

/// Runs both schemes end to end on `image` and records the three compared
/// properties together with the measurements behind them.
ComparisonReport CompareSchemes(const BinaryImage& image, int n, uint64_t seed);

}  // namespace qvss

#endif  // QVSS_NAOR_H_
