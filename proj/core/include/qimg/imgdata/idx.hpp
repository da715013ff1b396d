// Copyright 2026 The qimg Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qimg/imgdata/image.hpp"

namespace qimg::imgdata {

// IDX files as distributed with (Fashion-)MNIST: big-endian 32-bit header
// words, unsigned byte payload.
inline constexpr std::uint32_t kIdxImagesMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelsMagic = 0x00000801;

class IdxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad or missing magic number / header.
class IdxFormatError : public IdxError {
 public:
  using IdxError::IdxError;
};

/// Header promises more bytes than the stream holds.
class IdxLengthError : public IdxError {
 public:
  using IdxError::IdxError;
};

std::vector<GrayImage> parse_idx_images(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes);

// All images must share one size.
std::vector<std::uint8_t> write_idx_images(std::span<const GrayImage> images);
std::vector<std::uint8_t> write_idx_labels(std::span<const std::uint8_t> labels);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

}  // namespace qimg::imgdata
