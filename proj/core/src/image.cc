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

#include "qvss/image.h"

#include <fstream>
#include <iterator>

#include "qvss/error.h"

namespace qvss {
namespace {

constexpr size_t kPlainLineLimit = 70;

[[noreturn]] void FormatError(size_t offset, const std::string& what) {
  Throw(ErrorKind::kFormat, "PBM byte " + std::to_string(offset) + ": " + what);
}

bool IsSpace(uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class Cursor {
 public:
  explicit Cursor(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  size_t offset() const { return pos_; }
  bool done() const { return pos_ >= bytes_.size(); }
  uint8_t peek() const { return bytes_[pos_]; }
  uint8_t next() { return bytes_[pos_++]; }

  void SkipSpaceAndComments() {
    while (!done()) {
      if (IsSpace(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!done() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  uint32_t ReadDimension(const char* name) {
    SkipSpaceAndComments();
    const size_t start = pos_;
    uint64_t value = 0;
    while (!done() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + (next() - '0');
      if (value > kMaxImageSide) {
        FormatError(start, std::string(name) + " exceeds " +
                               std::to_string(kMaxImageSide));
      }
    }
    if (pos_ == start) {
      FormatError(start, std::string("expected ") + name);
    }
    if (value == 0) FormatError(start, std::string(name) + " is zero");
    return static_cast<uint32_t>(value);
  }

 private:
  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

}  // namespace

const char* ColorName(Color c) {
  return c == Color::kBlack ? "black" : "white";
}

BinaryImage::BinaryImage(uint32_t width, uint32_t height)
    : width_(width), height_(height) {
  if (width == 0 || height == 0 || width > kMaxImageSide ||
      height > kMaxImageSide) {
    Throw(ErrorKind::kSize, "image dimensions " + std::to_string(width) + "x" +
                                std::to_string(height) + " outside [1, " +
                                std::to_string(kMaxImageSide) + "]");
  }
  pixels_.assign(static_cast<size_t>(width) * height, Color::kWhite);
}

BinaryImage BinaryImage::FromPixels(uint32_t width, uint32_t height,
                                    std::span<const Color> colors) {
  BinaryImage image(width, height);
  if (colors.size() != image.pixel_count()) {
    Throw(ErrorKind::kArgument,
          std::to_string(colors.size()) + " colors for a " +
              std::to_string(width) + "x" + std::to_string(height) + " image");
  }
  image.pixels_.assign(colors.begin(), colors.end());
  return image;
}

BinaryImage ReadPbm(std::span<const uint8_t> bytes) {
  Cursor cur(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4')) {
    FormatError(0, "magic is not P1 or P4");
  }
  const bool raw = bytes[1] == '4';
  cur.next();
  cur.next();
  if (!cur.done() && !IsSpace(cur.peek()) && cur.peek() != '#') {
    FormatError(cur.offset(), "magic is not P1 or P4");
  }
  const uint32_t width = cur.ReadDimension("width");
  const uint32_t height = cur.ReadDimension("height");
  BinaryImage image(width, height);

  if (raw) {
    if (cur.done() || !IsSpace(cur.peek())) {
      FormatError(cur.offset(), "expected single whitespace before raster");
    }
    cur.next();
    const size_t row_bytes = (width + 7) / 8;
    const size_t start = cur.offset();
    if (bytes.size() - start < row_bytes * height) {
      FormatError(bytes.size(), "truncated raster, need " +
                                    std::to_string(row_bytes * height) +
                                    " bytes from offset " +
                                    std::to_string(start));
    }
    for (uint32_t r = 0; r < height; ++r) {
      const uint8_t* row = bytes.data() + start + r * row_bytes;
      for (uint32_t c = 0; c < width; ++c) {
        const int bit = (row[c / 8] >> (7 - c % 8)) & 1;
        image.set(r, c, FromBit(bit));
      }
    }
    return image;
  }

  for (uint32_t r = 0; r < height; ++r) {
    for (uint32_t c = 0; c < width; ++c) {
      cur.SkipSpaceAndComments();
      if (cur.done()) FormatError(cur.offset(), "truncated raster");
      const size_t at = cur.offset();
      const uint8_t ch = cur.next();
      if (ch != '0' && ch != '1') {
        FormatError(at, "raster value must be 0 or 1");
      }
      image.set(r, c, FromBit(ch - '0'));
    }
  }
  return image;
}

std::vector<uint8_t> WritePbm(const BinaryImage& image, PbmVariant variant) {
  const bool raw = variant == PbmVariant::kRaw;
  const std::string header = std::string(raw ? "P4" : "P1") + "\n" +
                             std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  if (raw) {
    const size_t row_bytes = (image.width() + 7) / 8;
    for (uint32_t r = 0; r < image.height(); ++r) {
      std::vector<uint8_t> row(row_bytes, 0);
      for (uint32_t c = 0; c < image.width(); ++c) {
        if (image.at(r, c) == Color::kBlack) row[c / 8] |= 0x80 >> (c % 8);
      }
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }
  // Plain rows as bare digits, wrapped so no line exceeds 70 characters.
  for (uint32_t r = 0; r < image.height(); ++r) {
    for (uint32_t c = 0; c < image.width(); ++c) {
      if (c > 0 && c % kPlainLineLimit == 0) out.push_back('\n');
      out.push_back(image.at(r, c) == Color::kBlack ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

BinaryImage ReadPbmFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Throw(ErrorKind::kFormat, "cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return ReadPbm(bytes);
}

}  // namespace qvss
