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

#ifndef QVSS_IMAGE_H_
#define QVSS_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qvss {

enum class Color : uint8_t { kWhite = 0, kBlack = 1 };

inline int ToBit(Color c) { return static_cast<int>(c); }
inline Color FromBit(int bit) { return bit ? Color::kBlack : Color::kWhite; }
const char* ColorName(Color c);

inline constexpr uint32_t kMaxImageSide = 4096;

/// Bilevel image, row-major. Pixel index l (1-based) is at
/// row (l-1) / width, column (l-1) % width.
class BinaryImage {
 public:
  BinaryImage(uint32_t width, uint32_t height);
  static BinaryImage FromPixels(uint32_t width, uint32_t height,
                                std::span<const Color> colors);

  uint32_t width() const { return width_; }
  uint32_t height() const { return height_; }
  size_t pixel_count() const { return pixels_.size(); }

  Color at(uint32_t row, uint32_t col) const {
    return pixels_[static_cast<size_t>(row) * width_ + col];
  }
  void set(uint32_t row, uint32_t col, Color c) {
    pixels_[static_cast<size_t>(row) * width_ + col] = c;
  }
  /// One-based pixel index.
  Color pixel(size_t l) const { return pixels_.at(l - 1); }
  void set_pixel(size_t l, Color c) { pixels_.at(l - 1) = c; }

  std::span<const Color> pixels() const { return pixels_; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  uint32_t width_;
  uint32_t height_;
  std::vector<Color> pixels_;
};

enum class PbmVariant { kPlain /* P1 */, kRaw /* P4 */ };

BinaryImage ReadPbm(std::span<const uint8_t> bytes);
std::vector<uint8_t> WritePbm(const BinaryImage& image, PbmVariant variant);

BinaryImage ReadPbmFile(const std::string& path);

}  // namespace qvss

#endif  // QVSS_IMAGE_H_
