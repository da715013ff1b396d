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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qimg::imgdata {

/// Row-major 8-bit grayscale raster.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  // Throws std::invalid_argument unless pixels.size() == width * height.
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  static GrayImage filled(int width, int height, std::uint8_t value);

  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return pixels.size(); }

  bool operator==(const GrayImage&) const = default;
};

/// Area-weighted block averaging onto an out_width x out_height grid. Source
/// pixels straddling a block boundary contribute by overlap area; results are
/// rounded half up. Requires 0 < out dims <= source dims.
GrayImage downscale(const GrayImage& image, int out_width, int out_height);

/// pixel / 255 in row-major order.
std::vector<double> normalized(const GrayImage& image);

/// 1 where pixel / 255 > 0.5, else 0.
std::vector<std::uint8_t> binarize(const GrayImage& image);

/// Min-max scales to [0, 1], then thresholds at 0.5. A constant vector maps to
/// all zeros.
std::vector<std::uint8_t> binarize(std::span<const double> features);

}  // namespace qimg::imgdata
