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

// Seeded random streams.
//
// A 64-bit master seed is expanded into independent named streams. The key of
// each stream is BLAKE2b-256 over
//
//     "dpvqc.stream.v1" || 0x00 || le64(master_seed) || 0x00 || name
//
// and the stream itself is the ChaCha20 keystream under that key with a zero
// nonce, consumed as little-endian 64-bit words. Changing how one stream is
// consumed never shifts the values seen by another.

#ifndef DPVQC_RNG_HPP_
#define DPVQC_RNG_HPP_

#include <sodium.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dpvqc {

inline constexpr std::string_view kDataStream = "data-gen";
inline constexpr std::string_view kShuffleStream = "shuffle";
inline constexpr std::string_view kInitStream = "init";
inline constexpr std::string_view kNoiseStream = "dp-noise";
inline constexpr std::string_view kSplitStream = "split";

namespace detail {

inline void ensure_sodium() {
  static const bool ok = [] { return sodium_init() >= 0; }();
  if (!ok) throw std::runtime_error("libsodium initialization failed");
}

}  // namespace detail

// ChaCha20 keystream exposed as a UniformRandomBitGenerator.
class StreamEngine {
 public:
  using result_type = std::uint64_t;
  using Key = std::array<unsigned char, crypto_stream_chacha20_KEYBYTES>;

  explicit StreamEngine(const Key& key) : key_(key) { detail::ensure_sodium(); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    if (pos_ == kWords) refill();
    return words_[pos_++];
  }

  // Number of 64-byte ChaCha20 blocks consumed so far.
  std::uint64_t blocks_consumed() const { return next_block_; }

 private:
  static constexpr std::size_t kBlocks = 8;
  static constexpr std::size_t kBytes = kBlocks * 64;
  static constexpr std::size_t kWords = kBytes / 8;

  void refill() {
    std::array<unsigned char, kBytes> zeros{};
    std::array<unsigned char, kBytes> out{};
    std::array<unsigned char, crypto_stream_chacha20_NONCEBYTES> nonce{};
    crypto_stream_chacha20_xor_ic(out.data(), zeros.data(), kBytes,
                                  nonce.data(), next_block_, key_.data());
    next_block_ += kBlocks;
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t v = 0;
      for (int b = 7; b >= 0; --b) v = (v << 8) | out[w * 8 + b];
      words_[w] = v;
    }
    pos_ = 0;
  }

  Key key_;
  std::array<std::uint64_t, kWords> words_{};
  std::size_t pos_ = kWords;
  std::uint64_t next_block_ = 0;
};

inline StreamEngine::Key derive_stream_key(std::uint64_t master_seed,
                                           std::string_view name) {
  detail::ensure_sodium();
  constexpr std::string_view kDomain = "dpvqc.stream.v1";
  std::vector<unsigned char> msg(kDomain.begin(), kDomain.end());
  msg.push_back(0);
  for (int i = 0; i < 8; ++i) {
    msg.push_back(static_cast<unsigned char>(master_seed >> (8 * i)));
  }
  msg.push_back(0);
  msg.insert(msg.end(), name.begin(), name.end());
  StreamEngine::Key key{};
  crypto_generichash(key.data(), key.size(), msg.data(), msg.size(), nullptr,
                     0);
  return key;
}

inline StreamEngine derive_stream(std::uint64_t master_seed,
                                  std::string_view name) {
  return StreamEngine(derive_stream_key(master_seed, name));
}

}  // namespace dpvqc

#endif  // DPVQC_RNG_HPP_
