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

// Datasets: the 2D blobs / moons / circles generators, the MNIST IDX reader
// and writer, the binary 0-vs-1 filter, and seeded splitting.

#ifndef DPVQC_DATA_HPP_
#define DPVQC_DATA_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dpvqc/errors.hpp"
#include "dpvqc/example.hpp"
#include "dpvqc/rng.hpp"

namespace dpvqc {

inline constexpr double kDefaultMoonsNoise = 0.1;
inline constexpr double kDefaultCirclesNoise = 0.05;
inline constexpr double kDefaultCirclesFactor = 0.5;

inline constexpr std::uint32_t kIdxImageMagic = 2051;
inline constexpr std::uint32_t kIdxLabelMagic = 2049;
inline constexpr int kMnistSide = 28;
inline constexpr std::size_t kMnistPixels = kMnistSide * kMnistSide;
inline constexpr std::size_t kPaddedPixels = 1024;
inline constexpr std::size_t kDownsampledPixels = 64;

namespace detail {

inline void check_even(std::size_t n, const char* what) {
  if (n < 2 || n % 2 != 0) {
    throw ArgumentError(std::string(what) + ": n must be even and >= 2, got " +
                        std::to_string(n));
  }
}

// Adds N(0, std^2) to both coordinates; draws nothing when std is zero.
template <class Engine>
void jitter(Dataset& data, double noise_std, Engine& rng) {
  if (!(noise_std >= 0) || !std::isfinite(noise_std)) {
    throw ArgumentError("noise std must be finite and >= 0");
  }
  if (noise_std == 0) return;
  std::normal_distribution<double> normal(0.0, noise_std);
  for (LabeledExample& e : data) {
    for (double& v : e.features) v += normal(rng);
  }
}

template <class Engine>
std::array<std::array<double, 2>, 2> draw_centers(Engine& rng) {
  std::uniform_real_distribution<double> uniform(-10.0, 10.0);
  std::array<std::array<double, 2>, 2> centers{};
  for (auto& c : centers) {
    c[0] = uniform(rng);
    c[1] = uniform(rng);
  }
  return centers;
}

}  // namespace detail

// Two unit-variance Gaussian clusters of n/2 points around centers drawn
// uniformly from [-10, 10]^2. Class 0 first.
inline Dataset make_blobs(std::size_t n, std::uint64_t seed) {
  detail::check_even(n, "make_blobs");
  StreamEngine rng = derive_stream(seed, kDataStream);
  const auto centers = detail::draw_centers(rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  Dataset out;
  out.reserve(n);
  for (int label = 0; label < 2; ++label) {
    for (std::size_t i = 0; i < n / 2; ++i) {
      const double x = centers[label][0] + normal(rng);
      const double y = centers[label][1] + normal(rng);
      out.push_back({{x, y}, label});
    }
  }
  return out;
}

// Cluster centers drawn by make_blobs for this seed.
inline std::array<std::array<double, 2>, 2> blob_centers(std::uint64_t seed) {
  StreamEngine rng = derive_stream(seed, kDataStream);
  return detail::draw_centers(rng);
}

// Interleaving half circles; t runs over n/2 evenly spaced points of [0, pi].
inline Dataset make_moons(std::size_t n, double noise_std, std::uint64_t seed) {
  detail::check_even(n, "make_moons");
  const std::size_t half = n / 2;
  Dataset out;
  out.reserve(n);
  auto t_at = [&](std::size_t i) {
    return half == 1 ? 0.0
                     : std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(half - 1);
  };
  for (std::size_t i = 0; i < half; ++i) {
    const double t = t_at(i);
    out.push_back({{std::cos(t), std::sin(t)}, 0});
  }
  for (std::size_t i = 0; i < half; ++i) {
    const double t = t_at(i);
    out.push_back({{1 - std::cos(t), 1 - std::sin(t) - 0.5}, 1});
  }
  StreamEngine rng = derive_stream(seed, kDataStream);
  detail::jitter(out, noise_std, rng);
  return out;
}

// Concentric circles of radius 1 (class 0) and `factor` (class 1). Both share
// the n/2 angles 2 pi i / (n/2).
inline Dataset make_circles(std::size_t n, double factor, double noise_std,
                            std::uint64_t seed) {
  detail::check_even(n, "make_circles");
  if (!(factor > 0 && factor < 1)) {
    throw ArgumentError("circle factor must lie in (0, 1)");
  }
  const std::size_t half = n / 2;
  Dataset out;
  out.reserve(n);
  for (int label = 0; label < 2; ++label) {
    const double r = label == 0 ? 1.0 : factor;
    for (std::size_t i = 0; i < half; ++i) {
      const double a = 2 * std::numbers::pi * static_cast<double>(i) /
                       static_cast<double>(half);
      out.push_back({{r * std::cos(a), r * std::sin(a)}, label});
    }
  }
  StreamEngine rng = derive_stream(seed, kDataStream);
  detail::jitter(out, noise_std, rng);
  return out;
}

namespace detail {

inline std::vector<unsigned char> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::uint32_t read_be32(const std::vector<unsigned char>& buf,
                               std::size_t offset, const std::string& path) {
  if (offset + 4 > buf.size()) {
    throw FormatError("'" + path + "' is truncated in its header", buf.size());
  }
  return (std::uint32_t{buf[offset]} << 24) |
         (std::uint32_t{buf[offset + 1]} << 16) |
         (std::uint32_t{buf[offset + 2]} << 8) | std::uint32_t{buf[offset + 3]};
}

inline void write_be32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v >> 24), static_cast<char>(v >> 16),
                     static_cast<char>(v >> 8), static_cast<char>(v)};
  out.write(b, 4);
}

}  // namespace detail

// Reads an IDX image file (magic 2051, 28x28) and its label file (magic
// 2049). Pixels are scaled by 1/255.
inline Dataset load_mnist_idx(const std::string& images_path,
                              const std::string& labels_path) {
  const std::vector<unsigned char> img = detail::read_file(images_path);
  const std::vector<unsigned char> lab = detail::read_file(labels_path);

  if (detail::read_be32(img, 0, images_path) != kIdxImageMagic) {
    throw FormatError("'" + images_path + "' has a bad image magic number", 0);
  }
  const std::uint32_t n_images = detail::read_be32(img, 4, images_path);
  const std::uint32_t rows = detail::read_be32(img, 8, images_path);
  const std::uint32_t cols = detail::read_be32(img, 12, images_path);
  if (rows != kMnistSide || cols != kMnistSide) {
    throw FormatError("'" + images_path + "' has dimensions " +
                          std::to_string(rows) + "x" + std::to_string(cols) +
                          ", expected 28x28",
                      8);
  }
  const std::uint64_t img_need = 16 + std::uint64_t{n_images} * kMnistPixels;
  if (img.size() < img_need) {
    throw FormatError("'" + images_path + "' is truncated: " +
                          std::to_string(n_images) + " images need " +
                          std::to_string(img_need) + " bytes",
                      img.size());
  }

  if (detail::read_be32(lab, 0, labels_path) != kIdxLabelMagic) {
    throw FormatError("'" + labels_path + "' has a bad label magic number", 0);
  }
  const std::uint32_t n_labels = detail::read_be32(lab, 4, labels_path);
  if (n_labels != n_images) {
    throw FormatError("'" + labels_path + "' holds " +
                          std::to_string(n_labels) + " labels but '" +
                          images_path + "' holds " + std::to_string(n_images) +
                          " images",
                      4);
  }
  const std::uint64_t lab_need = 8 + std::uint64_t{n_labels};
  if (lab.size() < lab_need) {
    throw FormatError("'" + labels_path + "' is truncated", lab.size());
  }

  Dataset out(n_images);
  for (std::size_t i = 0; i < n_images; ++i) {
    const unsigned char label = lab[8 + i];
    if (label > 9) {
      throw FormatError("label " + std::to_string(label) + " is not a digit",
                        8 + i);
    }
    out[i].label = label;
    out[i].features.resize(kMnistPixels);
    const unsigned char* px = img.data() + 16 + i * kMnistPixels;
    for (std::size_t p = 0; p < kMnistPixels; ++p) {
      out[i].features[p] = px[p] / 255.0;
    }
  }
  return out;
}

// Inverse of load_mnist_idx. Pixels are stored as round(255 v).
inline void write_mnist_idx(const std::string& images_path,
                            const std::string& labels_path,
                            const Dataset& examples) {
  std::ofstream img(images_path, std::ios::binary);
  std::ofstream lab(labels_path, std::ios::binary);
  if (!img || !lab) throw Error("cannot create IDX output files");
  const auto n = static_cast<std::uint32_t>(examples.size());
  detail::write_be32(img, kIdxImageMagic);
  detail::write_be32(img, n);
  detail::write_be32(img, kMnistSide);
  detail::write_be32(img, kMnistSide);
  detail::write_be32(lab, kIdxLabelMagic);
  detail::write_be32(lab, n);
  for (const LabeledExample& e : examples) {
    if (e.features.size() != kMnistPixels) {
      throw SizeError("IDX images need 784 pixels, got " +
                      std::to_string(e.features.size()));
    }
    if (e.label < 0 || e.label > 9) {
      throw ArgumentError("IDX labels must be digits");
    }
    for (double v : e.features) {
      const double b = std::clamp(std::round(v * 255.0), 0.0, 255.0);
      img.put(static_cast<char>(static_cast<unsigned char>(b)));
    }
    lab.put(static_cast<char>(static_cast<unsigned char>(e.label)));
  }
  if (!img || !lab) throw Error("failed writing IDX output files");
}

// Keeps digits 0 and 1 and zero-pads the 784 pixels to 1024 features.
inline Dataset filter_binary_and_pad(const Dataset& examples) {
  Dataset out;
  for (const LabeledExample& e : examples) {
    if (e.label != 0 && e.label != 1) continue;
    LabeledExample p = e;
    p.features.resize(std::max(kPaddedPixels, p.features.size()), 0.0);
    out.push_back(std::move(p));
  }
  return out;
}

// Pads a 28x28 image by two pixels on each side to 32x32 and averages 4x4
// cells, giving 64 features.
inline std::vector<double> downsample_8x8(const std::vector<double>& image) {
  if (image.size() < kMnistPixels) {
    throw SizeError("downsampling needs a 28x28 image");
  }
  std::vector<double> out(kDownsampledPixels, 0.0);
  for (int r = 0; r < kMnistSide; ++r) {
    for (int c = 0; c < kMnistSide; ++c) {
      const int cell = ((r + 2) / 4) * 8 + (c + 2) / 4;
      out[cell] += image[r * kMnistSide + c];
    }
  }
  for (double& v : out) v /= 16.0;
  return out;
}

// Keeps digits 0 and 1 and downsamples each image to 8x8.
inline Dataset filter_binary_8x8(const Dataset& examples) {
  Dataset out;
  for (const LabeledExample& e : examples) {
    if (e.label != 0 && e.label != 1) continue;
    out.push_back({downsample_8x8(e.features), e.label});
  }
  return out;
}

struct SplitSpec {
  std::array<double, 3> fractions{0.6, 0.2, 0.2};
  std::uint64_t seed = 0;

  void validate() const {
    double sum = 0.0;
    for (double f : fractions) {
      if (!(f >= 0 && f <= 1)) {
        throw ArgumentError("split fractions must lie in [0, 1]");
      }
      sum += f;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ArgumentError("split fractions must sum to 1");
    }
  }
};

struct SplitResult {
  Dataset train;
  Dataset validate;
  Dataset test;
};

// Seeded shuffle, then contiguous train / validate / test slices. The
// validate and test sizes are floor(n f); train takes the remainder.
inline SplitResult split(const Dataset& examples, const SplitSpec& spec) {
  spec.validate();
  const std::size_t n = examples.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  StreamEngine rng = derive_stream(spec.seed, kSplitStream);
  std::shuffle(order.begin(), order.end(), rng);
  const auto n_val =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.fractions[1]));
  const auto n_test =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.fractions[2]));
  const std::size_t n_train = n - n_val - n_test;
  SplitResult r;
  for (std::size_t i = 0; i < n; ++i) {
    const LabeledExample& e = examples[order[i]];
    if (i < n_train) {
      r.train.push_back(e);
    } else if (i < n_train + n_val) {
      r.validate.push_back(e);
    } else {
      r.test.push_back(e);
    }
  }
  return r;
}

// 2D datasets as CSV with header x1,x2,label.
inline void write_csv(std::ostream& out, const Dataset& data) {
  out << "x1,x2,label\n";
  out << std::setprecision(17);
  for (const LabeledExample& e : data) {
    if (e.features.size() != 2) {
      throw SizeError("CSV export supports 2D features only");
    }
    out << e.features[0] << ',' << e.features[1] << ',' << e.label << '\n';
  }
}

inline Dataset read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x1,x2,label") {
    throw ArgumentError("CSV must start with the header x1,x2,label");
  }
  Dataset out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    double x1 = 0;
    double x2 = 0;
    int label = 0;
    char c1 = 0;
    char c2 = 0;
    if (!(row >> x1 >> c1 >> x2 >> c2 >> label) || c1 != ',' || c2 != ',') {
      throw ArgumentError("malformed CSV row at line " +
                          std::to_string(line_no));
    }
    out.push_back({{x1, x2}, label});
  }
  return out;
}

}  // namespace dpvqc

#endif  // DPVQC_DATA_HPP_
