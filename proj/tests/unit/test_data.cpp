// Copyright 2026 The dpvqc Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "dpvqc/data.hpp"
#include "dpvqc/errors.hpp"
#include "test_util.hpp"

namespace dpvqc {
namespace {

std::size_t count_label(const Dataset& d, int label) {
  std::size_t n = 0;
  for (const auto& e : d) n += e.label == label;
  return n;
}

TEST(Blobs, BalancedAndNearCenters) {
  const Dataset d = make_blobs(200, 11);
  ASSERT_EQ(d.size(), 200u);
  EXPECT_EQ(count_label(d, 0), 100u);
  EXPECT_EQ(count_label(d, 1), 100u);
  const auto centers = blob_centers(11);
  for (int label = 0; label < 2; ++label) {
    double mx = 0, my = 0;
    for (const auto& e : d) {
      if (e.label != label) continue;
      mx += e.features[0];
      my += e.features[1];
    }
    EXPECT_NEAR(mx / 100, centers[label][0], 4.0 / std::sqrt(100.0));
    EXPECT_NEAR(my / 100, centers[label][1], 4.0 / std::sqrt(100.0));
    EXPECT_GE(centers[label][0], -10.0);
    EXPECT_LE(centers[label][0], 10.0);
  }
}

TEST(Blobs, SeedDeterminism) {
  EXPECT_EQ(make_blobs(50, 3), make_blobs(50, 3));
  EXPECT_NE(make_blobs(50, 3), make_blobs(50, 4));
  EXPECT_THROW(make_blobs(7, 1), ArgumentError);
  EXPECT_THROW(make_blobs(0, 1), ArgumentError);
}

TEST(Moons, NoiselessEndpoints) {
  const Dataset d = make_moons(200, 0.0, 1);
  ASSERT_EQ(d.size(), 200u);
  const auto it0 = std::find_if(d.begin(), d.end(),
                                [](const auto& e) { return e.label == 0; });
  const auto it1 = std::find_if(d.begin(), d.end(),
                                [](const auto& e) { return e.label == 1; });
  EXPECT_EQ(it0->features, (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(it1->features, (std::vector<double>{0.0, 0.5}));
  for (const auto& e : d) {
    if (e.label == 0) {
      EXPECT_NEAR(std::hypot(e.features[0], e.features[1]), 1.0, 1e-15);
      EXPECT_GE(e.features[1], -1e-15);
    }
  }
  EXPECT_EQ(count_label(d, 1), 100u);
}

TEST(Moons, NoiseDependsOnSeed) {
  EXPECT_EQ(make_moons(40, 0.1, 2), make_moons(40, 0.1, 2));
  EXPECT_NE(make_moons(40, 0.1, 2), make_moons(40, 0.1, 3));
  EXPECT_EQ(make_moons(40, 0.0, 2), make_moons(40, 0.0, 3));
  EXPECT_THROW(make_moons(40, -0.1, 2), ArgumentError);
}

TEST(Circles, NoiselessGeometry) {
  const Dataset d = make_circles(200, 0.5, 0.0, 1);
  EXPECT_EQ(count_label(d, 0), 100u);
  EXPECT_EQ(count_label(d, 1), 100u);
  double min_dist = 1e9;
  for (const auto& a : d) {
    const double r = std::hypot(a.features[0], a.features[1]);
    EXPECT_NEAR(r, a.label == 0 ? 1.0 : 0.5, 1e-15);
    if (a.label != 0) continue;
    for (const auto& b : d) {
      if (b.label != 1) continue;
      min_dist = std::min(min_dist, std::hypot(a.features[0] - b.features[0],
                                               a.features[1] - b.features[1]));
    }
  }
  EXPECT_NEAR(min_dist, 0.5, 1e-12);
}

TEST(Circles, InvalidFactor) {
  EXPECT_THROW(make_circles(10, 1.0, 0.0, 1), ArgumentError);
  EXPECT_THROW(make_circles(10, 0.0, 0.0, 1), ArgumentError);
}

Dataset synthetic_digits(testutil::Gen& g, std::size_t n) {
  Dataset d;
  for (std::size_t i = 0; i < n; ++i) {
    LabeledExample e;
    e.label = g.integer(0, 9);
    for (std::size_t p = 0; p < kMnistPixels; ++p) {
      e.features.push_back(g.integer(0, 255) / 255.0);
    }
    d.push_back(e);
  }
  return d;
}

TEST(Idx, RoundTripIsExact) {
  testutil::Gen g(51);
  const auto dir = testutil::scratch_dir("idx-roundtrip");
  const Dataset d = synthetic_digits(g, 17);
  const std::string img = (dir / "img").string();
  const std::string lab = (dir / "lab").string();
  write_mnist_idx(img, lab, d);
  EXPECT_EQ(load_mnist_idx(img, lab), d);
}

std::vector<unsigned char> slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void dump(const std::string& p, const std::vector<unsigned char>& b) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(b.data()),
            static_cast<std::streamsize>(b.size()));
}

std::uint64_t format_offset(const std::string& img, const std::string& lab) {
  try {
    load_mnist_idx(img, lab);
  } catch (const FormatError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no FormatError";
  return ~0ull;
}

TEST(Idx, CorruptionsReportOffsets) {
  testutil::Gen g(52);
  const auto dir = testutil::scratch_dir("idx-corrupt");
  const std::string img = (dir / "img").string();
  const std::string lab = (dir / "lab").string();
  const std::string bad = (dir / "bad").string();
  write_mnist_idx(img, lab, synthetic_digits(g, 3));
  const auto img_bytes = slurp(img);
  const auto lab_bytes = slurp(lab);

  auto b = img_bytes;
  std::fill(b.begin(), b.begin() + 4, 0);
  dump(bad, b);
  EXPECT_EQ(format_offset(bad, lab), 0u);

  b = img_bytes;
  b[11] = 27;
  dump(bad, b);
  EXPECT_EQ(format_offset(bad, lab), 8u);

  b = img_bytes;
  b.resize(b.size() - 10);
  dump(bad, b);
  EXPECT_EQ(format_offset(bad, lab), b.size());

  b = lab_bytes;
  b[7] = 2;
  dump(bad, b);
  EXPECT_EQ(format_offset(img, bad), 4u);

  b = lab_bytes;
  b[8 + 2] = 12;
  dump(bad, b);
  EXPECT_EQ(format_offset(img, bad), 10u);

  b = lab_bytes;
  b[0] = 0xff;
  dump(bad, b);
  EXPECT_EQ(format_offset(img, bad), 0u);

  EXPECT_THROW(load_mnist_idx((dir / "missing").string(), lab), Error);
}

TEST(Idx, BundledBinarySubset) {
  const Dataset d =
      load_mnist_idx(testutil::mnist_images(), testutil::mnist_labels());
  EXPECT_EQ(d.size(), 2128u);
  EXPECT_EQ(count_label(d, 0), 1001u);
  EXPECT_EQ(count_label(d, 1), 1127u);
  for (const auto& e : d) {
    ASSERT_EQ(e.features.size(), kMnistPixels);
    for (double v : e.features) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

TEST(Filter, KeepsBinaryAndPads) {
  testutil::Gen g(53);
  const Dataset d = synthetic_digits(g, 60);
  const Dataset f = filter_binary_and_pad(d);
  std::size_t expected = 0;
  for (const auto& e : d) expected += e.label <= 1;
  ASSERT_EQ(f.size(), expected);
  std::size_t j = 0;
  for (const auto& e : d) {
    if (e.label > 1) continue;
    EXPECT_EQ(f[j].label, e.label);
    ASSERT_EQ(f[j].features.size(), kPaddedPixels);
    for (std::size_t p = 0; p < kMnistPixels; ++p) {
      EXPECT_EQ(f[j].features[p], e.features[p]);
    }
    for (std::size_t p = kMnistPixels; p < kPaddedPixels; ++p) {
      EXPECT_EQ(f[j].features[p], 0.0);
    }
    ++j;
  }
}

TEST(Downsample, CellAverages) {
  std::vector<double> img(kMnistPixels, 0.0);
  // Image pixel (0,0) lands at padded (2,2): cell 0. Pixel (27,27) at (29,29):
  // cell 63. Pixel (2,2) at (4,4): cell 9.
  img[0] = 1.0;
  img[27 * 28 + 27] = 0.5;
  img[2 * 28 + 2] = 0.8;
  const auto out = downsample_8x8(img);
  ASSERT_EQ(out.size(), 64u);
  EXPECT_DOUBLE_EQ(out[0], 1.0 / 16);
  EXPECT_DOUBLE_EQ(out[63], 0.5 / 16);
  EXPECT_DOUBLE_EQ(out[9], 0.8 / 16);
  double total = 0;
  for (double v : out) total += v;
  EXPECT_DOUBLE_EQ(total, 2.3 / 16);
  const auto full = downsample_8x8(std::vector<double>(kMnistPixels, 1.0));
  EXPECT_DOUBLE_EQ(full[0], 4.0 / 16);   // 2x2 real pixels in the corner
  EXPECT_DOUBLE_EQ(full[27], 1.0);       // interior cell
  EXPECT_THROW(downsample_8x8(std::vector<double>(10)), SizeError);
}

TEST(Split, SizesAndPartition) {
  Dataset d;
  for (int i = 0; i < 200; ++i) d.push_back({{double(i), 0.0}, i % 2});
  const SplitResult r = split(d, {{0.6, 0.2, 0.2}, 5});
  EXPECT_EQ(r.train.size(), 120u);
  EXPECT_EQ(r.validate.size(), 40u);
  EXPECT_EQ(r.test.size(), 40u);
  std::multiset<double> ids;
  for (const auto* part : {&r.train, &r.validate, &r.test}) {
    for (const auto& e : *part) ids.insert(e.features[0]);
  }
  ASSERT_EQ(ids.size(), 200u);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(ids.count(double(i)), 1u);

  const SplitResult two = split(d, {{0.6, 0.0, 0.4}, 5});
  EXPECT_EQ(two.train.size(), 120u);
  EXPECT_TRUE(two.validate.empty());
  EXPECT_EQ(two.test.size(), 80u);
}

TEST(Split, FloorsWithRemainderToTrain) {
  Dataset d(11, LabeledExample{{0.0, 0.0}, 0});
  const SplitResult r = split(d, {{0.6, 0.2, 0.2}, 1});
  EXPECT_EQ(r.validate.size(), 2u);
  EXPECT_EQ(r.test.size(), 2u);
  EXPECT_EQ(r.train.size(), 7u);
}

TEST(Split, SeededAndValidated) {
  Dataset d;
  for (int i = 0; i < 50; ++i) d.push_back({{double(i), 0.0}, 0});
  EXPECT_EQ(split(d, {{0.6, 0.2, 0.2}, 9}).train,
            split(d, {{0.6, 0.2, 0.2}, 9}).train);
  EXPECT_NE(split(d, {{0.6, 0.2, 0.2}, 9}).train,
            split(d, {{0.6, 0.2, 0.2}, 10}).train);
  EXPECT_THROW(split(d, {{0.6, 0.3, 0.2}, 1}), ArgumentError);
  EXPECT_THROW(split(d, {{1.2, -0.2, 0.0}, 1}), ArgumentError);
}

TEST(Csv, RoundTrip) {
  const Dataset d = make_moons(30, 0.1, 4);
  std::stringstream s;
  write_csv(s, d);
  EXPECT_EQ(s.str().substr(0, 12), "x1,x2,label\n");
  EXPECT_EQ(read_csv(s), d);
  std::istringstream bad("a,b,c\n1,2,0\n");
  EXPECT_THROW(read_csv(bad), ArgumentError);
  std::istringstream row("x1,x2,label\n1;2;0\n");
  EXPECT_THROW(read_csv(row), ArgumentError);
}

}  // namespace
}  // namespace dpvqc
