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

// Little-endian byte stream helpers for the share and session formats.

#ifndef QVSS_SRC_BYTE_IO_H_
#define QVSS_SRC_BYTE_IO_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qvss/error.h"

namespace qvss::internal {

class ByteWriter {
 public:
  void Bytes(std::span<const uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void U8(uint8_t v) { out_.push_back(v); }
  void U16(uint16_t v) { Le(v, 2); }
  void U32(uint32_t v) { Le(v, 4); }
  void U64(uint64_t v) { Le(v, 8); }
  void F64(double v) { Le(std::bit_cast<uint64_t>(v), 8); }

  std::vector<uint8_t>& data() { return out_; }

 private:
  void Le(uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  std::vector<uint8_t> out_;
};

class ByteReader {
 public:
  ByteReader(std::span<const uint8_t> bytes, std::string what)
      : bytes_(bytes), what_(std::move(what)) {}

  size_t offset() const { return pos_; }
  size_t remaining() const { return bytes_.size() - pos_; }

  std::span<const uint8_t> Bytes(size_t count, const char* field) {
    Need(count, field);
    auto s = bytes_.subspan(pos_, count);
    pos_ += count;
    return s;
  }
  uint8_t U8(const char* field) { return static_cast<uint8_t>(Le(1, field)); }
  uint16_t U16(const char* field) { return static_cast<uint16_t>(Le(2, field)); }
  uint32_t U32(const char* field) { return static_cast<uint32_t>(Le(4, field)); }
  uint64_t U64(const char* field) { return Le(8, field); }
  double F64(const char* field) { return std::bit_cast<double>(Le(8, field)); }

  [[noreturn]] void Fail(const char* field, const std::string& what) const {
    Throw(ErrorKind::kFormat, what_ + " field '" + field + "' at byte " +
                                  std::to_string(pos_) + ": " + what);
  }

 private:
  void Need(size_t count, const char* field) const {
    if (remaining() < count) Fail(field, "truncated stream");
  }
  uint64_t Le(int width, const char* field) {
    Need(static_cast<size_t>(width), field);
    uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= uint64_t{bytes_[pos_ + i]} << (8 * i);
    pos_ += static_cast<size_t>(width);
    return v;
  }

  std::span<const uint8_t> bytes_;
  std::string what_;
  size_t pos_ = 0;
};

// MSB-first packing, padded with zero bits to a whole byte.
inline std::vector<uint8_t> PackBits(std::span<const uint8_t> bits) {
  std::vector<uint8_t> out((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

inline std::vector<uint8_t> UnpackBits(std::span<const uint8_t> packed, size_t count) {
  std::vector<uint8_t> out(count);
  for (size_t i = 0; i < count; ++i) out[i] = (packed[i / 8] >> (7 - i % 8)) & 1u;
  return out;
}

}  // namespace qvss::internal

#endif  // QVSS_SRC_BYTE_IO_H_
