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

#include <gtest/gtest.h>

#include <fstream>
#include <iterator>

#include "qvss/error.h"
#include "test_util.h"

namespace qvss {
namespace {

std::vector<uint8_t> Bytes(const std::string& s) { return {s.begin(), s.end()}; }

std::vector<uint8_t> ReadGolden(const std::string& name) {
  std::ifstream in(std::string(QVSS_GOLDEN_DIR) + "/" + name, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ErrorKind ReadKind(const std::string& text) {
  try {
    ReadPbm(Bytes(text));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorKind::kArgument;
}

TEST(Image, PlainExample) {
  const BinaryImage img = ReadPbm(Bytes("P1\n4 1\n0 1 1 0\n"));
  EXPECT_EQ(img.width(), 4u);
  EXPECT_EQ(img.height(), 1u);
  EXPECT_EQ(img, testing::WorkedExampleImage());
  EXPECT_EQ(img.pixel(1), Color::kWhite);
  EXPECT_EQ(img.pixel(2), Color::kBlack);
}

TEST(Image, PlainWithCommentsAndPackedDigits) {
  const BinaryImage img = ReadPbm(Bytes("P1\n# comment\n4 # w\n1\n0110"));
  EXPECT_EQ(img, testing::WorkedExampleImage());
}

TEST(Image, RawExample) {
  const BinaryImage img = ReadPbm(Bytes(std::string("P4\n4 1\n") + '\x60'));
  EXPECT_EQ(img, testing::WorkedExampleImage());
}

TEST(Image, RawRowPadding) {
  // 10 columns -> 2 bytes per row, low 6 bits of the second byte ignored.
  std::string raw = "P4\n10 2\n";
  raw += '\xFF'; raw += '\xC0';
  raw += '\x00'; raw += '\x7F';
  const BinaryImage img = ReadPbm(Bytes(raw));
  for (uint32_t c = 0; c < 10; ++c) {
    EXPECT_EQ(img.at(0, c), Color::kBlack);
    EXPECT_EQ(img.at(1, c), c == 9 ? Color::kBlack : Color::kWhite);
  }
  std::string canonical = "P4\n10 2\n";
  canonical += '\xFF'; canonical += '\xC0';
  canonical += '\x00'; canonical += '\x40';
  EXPECT_EQ(WritePbm(img, PbmVariant::kRaw), Bytes(canonical));
}

TEST(Image, WorkedExampleGoldenBytes) {
  const BinaryImage img = testing::WorkedExampleImage();
  EXPECT_EQ(WritePbm(img, PbmVariant::kPlain), ReadGolden("worked_example.pbm"));
  EXPECT_EQ(WritePbm(img, PbmVariant::kRaw), ReadGolden("worked_example_raw.pbm"));
}

TEST(Image, RejectsOtherFormats) {
  EXPECT_EQ(ReadKind("P5\n4 1\n255\n"), ErrorKind::kFormat);
  EXPECT_EQ(ReadKind("P2\n1 1\n1\n0\n"), ErrorKind::kFormat);
  EXPECT_EQ(ReadKind(""), ErrorKind::kFormat);
}

TEST(Image, RejectsMalformed) {
  EXPECT_EQ(ReadKind("P1\n4 1\n01"), ErrorKind::kFormat);
  EXPECT_EQ(ReadKind("P1\n4 1\n0120"), ErrorKind::kFormat);
  EXPECT_EQ(ReadKind("P1\n0 1\n"), ErrorKind::kFormat);
  EXPECT_EQ(ReadKind("P1\n4097 1\n"), ErrorKind::kFormat);
  EXPECT_EQ(ReadKind("P4\n16 2\n\x01\x02\x03"), ErrorKind::kFormat);
  EXPECT_EQ(ReadKind("P1\nx 1\n"), ErrorKind::kFormat);
  try {
    ReadPbm(Bytes("P1\n4 1\n01"));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
  }
}

TEST(Image, SizeLimits) {
  EXPECT_THROW(BinaryImage(0, 1), Error);
  EXPECT_THROW(BinaryImage(1, kMaxImageSide + 1), Error);
  BinaryImage big(kMaxImageSide, 1);
  EXPECT_EQ(big.pixel_count(), kMaxImageSide);
  const std::vector<Color> three(3, Color::kBlack);
  EXPECT_THROW(BinaryImage::FromPixels(2, 2, three), Error);
}

TEST(Image, RowMajorOneBasedIndex) {
  BinaryImage img(3, 2);
  img.set(1, 0, Color::kBlack);  // l = 1*3 + 0 + 1 = 4
  EXPECT_EQ(img.pixel(4), Color::kBlack);
  for (size_t l : {1u, 2u, 3u, 5u, 6u}) EXPECT_EQ(img.pixel(l), Color::kWhite);
  img.set_pixel(6, Color::kBlack);
  EXPECT_EQ(img.at(1, 2), Color::kBlack);
}

TEST(Image, RoundTripsRandomImages) {
  Rng rng = MakeRng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const uint32_t w = 1 + static_cast<uint32_t>(UniformBelow(rng, 256));
    const uint32_t h = 1 + static_cast<uint32_t>(UniformBelow(rng, 256));
    const BinaryImage img = testing::RandomImage(w, h, rng);
    EXPECT_EQ(ReadPbm(WritePbm(img, PbmVariant::kPlain)), img);
    EXPECT_EQ(ReadPbm(WritePbm(img, PbmVariant::kRaw)), img);
  }
}

TEST(Image, PlainLinesStayShort) {
  Rng rng = MakeRng(3);
  const BinaryImage img = testing::RandomImage(200, 3, rng);
  const auto bytes = WritePbm(img, PbmVariant::kPlain);
  size_t run = 0;
  for (uint8_t c : bytes) {
    run = c == '\n' ? 0 : run + 1;
    EXPECT_LE(run, 70u);
  }
}

TEST(Image, ColorNames) {
  EXPECT_STREQ(ColorName(Color::kWhite), "white");
  EXPECT_STREQ(ColorName(Color::kBlack), "black");
  EXPECT_EQ(ToBit(FromBit(1)), 1);
}

}  // namespace
}  // namespace qvss
