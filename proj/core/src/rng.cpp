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

#include "wordlaw/rng.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "wordlaw/errors.hpp"

namespace wordlaw {

GeneratorId parse_generator_id(std::string_view name) {
  if (name == "bsd_random") return GeneratorId::kBsdRandom;
  if (name == "mt19937") return GeneratorId::kMt19937;
  if (name == "lcg_minstd") return GeneratorId::kMinstdLcg;
  if (name == "exact_sampler") return GeneratorId::kExactSampler;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

std::string generator_name(GeneratorId id) {
  switch (id) {
    case GeneratorId::kBsdRandom: return "bsd_random";
    case GeneratorId::kMt19937: return "mt19937";
    case GeneratorId::kMinstdLcg: return "lcg_minstd";
    case GeneratorId::kExactSampler: return "exact_sampler";
  }
  return "unknown";
}

namespace {

/// 16807 x mod 2^31 - 1 without overflow (Schrage's method, the classic
/// signed formulation of the seeding LCG).
std::int32_t minstd_step(std::int32_t x) {
  const std::int32_t hi = x / 127773;
  const std::int32_t lo = x % 127773;
  std::int32_t word = 16807 * lo - 2836 * hi;
  if (word < 0) word += 2147483647;
  return word;
}

}  // namespace

BsdRandom::BsdRandom(std::uint32_t seed) {
  if (seed == 0) seed = 1;
  seed_ = seed;
  table_[0] = seed;
  for (int i = 1; i < 31; ++i)
    table_[i] = static_cast<std::uint32_t>(minstd_step(static_cast<std::int32_t>(table_[i - 1])));
  front_ = 3;
  rear_ = 0;
  for (int i = 0; i < 310; ++i) next();
}

std::uint32_t BsdRandom::next() {
  const std::uint32_t sum = table_[front_] + table_[rear_];
  table_[front_] = sum;
  front_ = (front_ + 1) % 31;
  rear_ = (rear_ + 1) % 31;
  return sum >> 1;
}

std::string BsdRandom::state() const {
  nlohmann::json j;
  j["generator"] = "bsd_random";
  j["seed"] = seed_;
  j["table"] = table_;
  j["front"] = front_;
  j["rear"] = rear_;
  return j.dump();
}

void BsdRandom::restore(std::string_view state) {
  auto j = nlohmann::json::parse(state);
  if (j.at("generator") != "bsd_random") throw std::invalid_argument("state is not bsd_random");
  seed_ = j.at("seed").get<std::uint32_t>();
  auto table = j.at("table").get<std::vector<std::uint32_t>>();
  if (table.size() != table_.size()) throw std::invalid_argument("bad bsd_random state table");
  std::copy(table.begin(), table.end(), table_.begin());
  front_ = j.at("front").get<int>();
  rear_ = j.at("rear").get<int>();
}

Mt19937::Mt19937(std::uint32_t seed) : seed_(seed) {
  mt_[0] = seed;
  for (std::uint32_t i = 1; i < 624; ++i)
    mt_[i] = 1812433253u * (mt_[i - 1] ^ (mt_[i - 1] >> 30)) + i;
  index_ = 624;
}

void Mt19937::refill() {
  constexpr std::uint32_t kUpper = 0x80000000u;
  constexpr std::uint32_t kLower = 0x7fffffffu;
  for (int i = 0; i < 624; ++i) {
    const std::uint32_t y = (mt_[static_cast<std::size_t>(i)] & kUpper) |
                            (mt_[static_cast<std::size_t>((i + 1) % 624)] & kLower);
    std::uint32_t v = mt_[static_cast<std::size_t>((i + 397) % 624)] ^ (y >> 1);
    if (y & 1u) v ^= 0x9908b0dfu;
    mt_[static_cast<std::size_t>(i)] = v;
  }
  index_ = 0;
}

std::uint32_t Mt19937::next() {
  if (index_ >= 624) refill();
  std::uint32_t y = mt_[static_cast<std::size_t>(index_++)];
  y ^= y >> 11;
  y ^= (y << 7) & 0x9d2c5680u;
  y ^= (y << 15) & 0xefc60000u;
  y ^= y >> 18;
  return y;
}

std::string Mt19937::state() const {
  nlohmann::json j;
  j["generator"] = "mt19937";
  j["seed"] = seed_;
  j["mt"] = mt_;
  j["index"] = index_;
  return j.dump();
}

void Mt19937::restore(std::string_view state) {
  auto j = nlohmann::json::parse(state);
  if (j.at("generator") != "mt19937") throw std::invalid_argument("state is not mt19937");
  seed_ = j.at("seed").get<std::uint32_t>();
  auto mt = j.at("mt").get<std::vector<std::uint32_t>>();
  if (mt.size() != mt_.size()) throw std::invalid_argument("bad mt19937 state");
  std::copy(mt.begin(), mt.end(), mt_.begin());
  index_ = j.at("index").get<int>();
}

MinstdLcg::MinstdLcg(std::uint32_t seed) {
  if (seed == 0 || seed >= 2147483647u) seed = 1;
  seed_ = seed;
  state_ = seed;
}

std::uint32_t MinstdLcg::next() {
  state_ = static_cast<std::uint32_t>(minstd_step(static_cast<std::int32_t>(state_)));
  return state_;
}

std::string MinstdLcg::state() const {
  nlohmann::json j;
  j["generator"] = "lcg_minstd";
  j["seed"] = seed_;
  j["state"] = state_;
  return j.dump();
}

void MinstdLcg::restore(std::string_view state) {
  auto j = nlohmann::json::parse(state);
  if (j.at("generator") != "lcg_minstd") throw std::invalid_argument("state is not lcg_minstd");
  seed_ = j.at("seed").get<std::uint32_t>();
  state_ = j.at("state").get<std::uint32_t>();
}

std::unique_ptr<Generator> make_generator(GeneratorId id, std::uint32_t seed) {
  switch (id) {
    case GeneratorId::kBsdRandom: return std::make_unique<BsdRandom>(seed);
    case GeneratorId::kMt19937: return std::make_unique<Mt19937>(seed);
    case GeneratorId::kMinstdLcg: return std::make_unique<MinstdLcg>(seed);
    case GeneratorId::kExactSampler:
      throw std::invalid_argument("exact_sampler draws counts, not words; "
                                  "it is handled by the audit directly");
  }
  throw std::invalid_argument("unknown generator id");
}

BitExtraction parse_extraction(std::string_view name) {
  if (name == "lsb") return BitExtraction::kLsb;
  if (name == "msb") return BitExtraction::kMsb;
  if (name == "parity") return BitExtraction::kParity;
  if (name == "threshold") return BitExtraction::kThreshold;
  throw std::invalid_argument("unknown extraction: " + std::string(name));
}

std::string extraction_name(BitExtraction extraction) {
  switch (extraction) {
    case BitExtraction::kLsb: return "lsb";
    case BitExtraction::kMsb: return "msb";
    case BitExtraction::kParity: return "parity";
    case BitExtraction::kThreshold: return "threshold";
  }
  return "unknown";
}

int extract_bit(std::uint32_t word, int output_bits, BitExtraction extraction) {
  switch (extraction) {
    case BitExtraction::kLsb: return static_cast<int>(word & 1u);
    case BitExtraction::kMsb: return static_cast<int>((word >> (output_bits - 1)) & 1u);
    case BitExtraction::kParity: return std::popcount(word) & 1;
    case BitExtraction::kThreshold:
      return word >= (std::uint32_t{1} << (output_bits - 1)) ? 1 : 0;
  }
  return 0;
}

int VectorBitSource::next_bit() {
  if (pos_ >= bits_.size()) throw StreamExhausted("bit source exhausted");
  return bits_[pos_++];
}

BitFileFormat parse_bit_format(std::string_view name) {
  if (name == "ascii") return BitFileFormat::kAscii;
  if (name == "packed") return BitFileFormat::kPacked;
  throw std::invalid_argument("unknown bit file format: " + std::string(name));
}

void write_bits(const std::filesystem::path& path, std::span<const std::uint8_t> bits,
                BitFileFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  if (format == BitFileFormat::kAscii) {
    std::string line;
    line.reserve(bits.size());
    for (std::uint8_t b : bits) line.push_back(b ? '1' : '0');
    out << line << '\n';
  } else {
    std::string bytes;
    bytes.reserve((bits.size() + 7) / 8);
    std::uint8_t current = 0;
    int filled = 0;
    for (std::uint8_t b : bits) {
      current = static_cast<std::uint8_t>((current << 1) | (b & 1u));
      if (++filled == 8) {
        bytes.push_back(static_cast<char>(current));
        current = 0;
        filled = 0;
      }
    }
    if (filled > 0) bytes.push_back(static_cast<char>(current << (8 - filled)));
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<std::uint8_t> read_bits(const std::filesystem::path& path, BitFileFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bits;
  if (format == BitFileFormat::kAscii) {
    char c;
    while (in.get(c)) {
      if (c == '0' || c == '1') bits.push_back(static_cast<std::uint8_t>(c - '0'));
      else if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
      else throw Error(std::string("unexpected character in bit file: '") + c + "'");
    }
  } else {
    char byte;
    while (in.get(byte)) {
      const auto b = static_cast<std::uint8_t>(byte);
      for (int i = 7; i >= 0; --i) bits.push_back((b >> i) & 1u);
    }
  }
  return bits;
}

}  // namespace wordlaw
