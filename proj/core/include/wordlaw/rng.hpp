// Copyright 2026 The wordlaw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef WORDLAW_RNG_HPP_
#define WORDLAW_RNG_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordlaw {

// The generators under test are embedded rather than taken from the
// platform so audit runs are reproducible bit for bit everywhere. All
// arithmetic is explicit 31/32-bit modular arithmetic.

enum class GeneratorId { kBsdRandom, kMt19937, kMinstdLcg, kExactSampler };

GeneratorId parse_generator_id(std::string_view name);
std::string generator_name(GeneratorId id);

/// A deterministic word generator with serializable state.
class Generator {
 public:
  virtual ~Generator() = default;
  virtual std::uint32_t next() = 0;
  /// Width of the output words in bits (31 for BSD random, 32 for MT).
  virtual int output_bits() const = 0;
  virtual GeneratorId id() const = 0;
  virtual std::uint32_t seed() const = 0;
  /// Serialized internal state; restore() resumes the exact stream.
  virtual std::string state() const = 0;
  virtual void restore(std::string_view state) = 0;
};

/// BSD random(): the additive feedback generator over x^31 + x^3 + 1.
/// State r[0..30] seeded by r[0] = seed, r[i] = 16807 r[i-1] mod 2^31 - 1
/// (Schrage's overflow-safe form), 310 warm-up outputs discarded, then
///   r[i] = r[i-31] + r[i-3]  (mod 2^32),  output = r[i] >> 1.
/// Matches the POSIX/BSD reference stream (seed 1 starts 1804289383, ...).
class BsdRandom final : public Generator {
 public:
  explicit BsdRandom(std::uint32_t seed);  // zero seed normalized to 1

  std::uint32_t next() override;
  int output_bits() const override { return 31; }
  GeneratorId id() const override { return GeneratorId::kBsdRandom; }
  std::uint32_t seed() const override { return seed_; }
  std::string state() const override;
  void restore(std::string_view state) override;

  /// The raw state table, front/rear pointers included (for tests of the
  /// additive recurrence).
  std::array<std::uint32_t, 31> state_table() const { return table_; }
  int front_index() const { return front_; }
  int rear_index() const { return rear_; }

 private:
  std::array<std::uint32_t, 31> table_{};
  int front_ = 3;
  int rear_ = 0;
  std::uint32_t seed_ = 1;
};

/// MT19937 with the reference seeding recurrence and tempering
/// (seed 5489 starts 3499211612, ...).
class Mt19937 final : public Generator {
 public:
  explicit Mt19937(std::uint32_t seed);

  std::uint32_t next() override;
  int output_bits() const override { return 32; }
  GeneratorId id() const override { return GeneratorId::kMt19937; }
  std::uint32_t seed() const override { return seed_; }
  std::string state() const override;
  void restore(std::string_view state) override;

 private:
  void refill();
  std::array<std::uint32_t, 624> mt_{};
  int index_ = 624;
  std::uint32_t seed_ = 0;
};

/// MINSTD: x <- 16807 x mod 2^31 - 1.
class MinstdLcg final : public Generator {
 public:
  explicit MinstdLcg(std::uint32_t seed);  // zero seed normalized to 1

  std::uint32_t next() override;
  int output_bits() const override { return 31; }
  GeneratorId id() const override { return GeneratorId::kMinstdLcg; }
  std::uint32_t seed() const override { return seed_; }
  std::string state() const override;
  void restore(std::string_view state) override;

 private:
  std::uint32_t state_ = 1;
  std::uint32_t seed_ = 1;
};

std::unique_ptr<Generator> make_generator(GeneratorId id, std::uint32_t seed);

/// How one output word maps to one bit.
enum class BitExtraction {
  kLsb,        // word & 1 (default)
  kMsb,        // top bit of the output width
  kParity,     // parity of all output bits
  kThreshold,  // word >= 2^(width-1)
};

BitExtraction parse_extraction(std::string_view name);
std::string extraction_name(BitExtraction extraction);

int extract_bit(std::uint32_t word, int output_bits, BitExtraction extraction);

/// A source of bits; either a generator + extraction or a bit file.
class BitSource {
 public:
  virtual ~BitSource() = default;
  /// Next bit (0/1). Throws StreamExhausted when no data remains.
  virtual int next_bit() = 0;
};

class GeneratorBitSource final : public BitSource {
 public:
  GeneratorBitSource(Generator& generator, BitExtraction extraction)
      : generator_(generator), extraction_(extraction) {}
  int next_bit() override {
    return extract_bit(generator_.next(), generator_.output_bits(), extraction_);
  }

 private:
  Generator& generator_;
  BitExtraction extraction_;
};

/// Bits held in memory (e.g. read from a file).
class VectorBitSource final : public BitSource {
 public:
  explicit VectorBitSource(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  int next_bit() override;
  std::size_t remaining() const { return bits_.size() - pos_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t pos_ = 0;
};

enum class BitFileFormat { kAscii, kPacked };

BitFileFormat parse_bit_format(std::string_view name);

/// ASCII format: '0'/'1' characters, whitespace ignored. Packed format:
/// raw bytes, MSB first within each byte; the writer pads the final byte
/// with zero bits.
void write_bits(const std::filesystem::path& path, std::span<const std::uint8_t> bits,
                BitFileFormat format);
std::vector<std::uint8_t> read_bits(const std::filesystem::path& path, BitFileFormat format);

}  // namespace wordlaw

#endif  // WORDLAW_RNG_HPP_
