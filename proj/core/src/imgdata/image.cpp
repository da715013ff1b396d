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

#include "qimg/imgdata/image.hpp"

#include <algorithm>
#include <cstdint>

namespace qimg::imgdata {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width(width), height(height), pixels(std::move(pixels)) {
  if (width < 0 || height < 0 ||
      this->pixels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("image of " + std::to_string(width) + "x" + std::to_string(height) +
                                " cannot hold " + std::to_string(this->pixels.size()) + " pixels");
  }
}

GrayImage GrayImage::filled(int width, int height, std::uint8_t value) {
  return GrayImage(width, height,
                   std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, value));
}

namespace {

// Overlap of output cell `cell` with source pixel `src`, both expressed in
// units of 1/out_len of a source pixel.
std::uint64_t overlap(int cell, int src, int in_len, int out_len) {
  const std::int64_t cell_lo = std::int64_t{cell} * in_len;
  const std::int64_t cell_hi = cell_lo + in_len;
  const std::int64_t src_lo = std::int64_t{src} * out_len;
  const std::int64_t src_hi = src_lo + out_len;
  const std::int64_t lo = std::max(cell_lo, src_lo);
  const std::int64_t hi = std::min(cell_hi, src_hi);
  return hi > lo ? static_cast<std::uint64_t>(hi - lo) : 0;
}

}  // namespace

GrayImage downscale(const GrayImage& image, int out_width, int out_height) {
  if (out_width <= 0 || out_height <= 0) {
    throw std::invalid_argument("downscale target must have positive dimensions");
  }
  if (out_width > image.width || out_height > image.height) {
    throw std::invalid_argument("downscale target " + std::to_string(out_width) + "x" +
                                std::to_string(out_height) + " exceeds source " +
                                std::to_string(image.width) + "x" + std::to_string(image.height));
  }
  const std::uint64_t total = std::uint64_t(image.width) * std::uint64_t(image.height);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(out_width) * out_height);
  for (int oy = 0; oy < out_height; ++oy) {
    // Source rows touched by this output row.
    const int y0 = static_cast<int>(std::int64_t{oy} * image.height / out_height);
    const int y1 = static_cast<int>((std::int64_t{oy + 1} * image.height + out_height - 1) / out_height);
    for (int ox = 0; ox < out_width; ++ox) {
      const int x0 = static_cast<int>(std::int64_t{ox} * image.width / out_width);
      const int x1 = static_cast<int>((std::int64_t{ox + 1} * image.width + out_width - 1) / out_width);
      std::uint64_t sum = 0;
      for (int y = y0; y < y1; ++y) {
        const std::uint64_t wy = overlap(oy, y, image.height, out_height);
        if (wy == 0) continue;
        for (int x = x0; x < x1; ++x) {
          sum += wy * overlap(ox, x, image.width, out_width) * image.at(x, y);
        }
      }
      // round(sum / total), halves up
      out[static_cast<std::size_t>(oy) * out_width + ox] =
          static_cast<std::uint8_t>((2 * sum + total) / (2 * total));
    }
  }
  return GrayImage(out_width, out_height, std::move(out));
}

std::vector<double> normalized(const GrayImage& image) {
  std::vector<double> out(image.size());
  std::transform(image.pixels.begin(), image.pixels.end(), out.begin(),
                 [](std::uint8_t p) { return p / 255.0; });
  return out;
}

std::vector<std::uint8_t> binarize(const GrayImage& image) {
  std::vector<std::uint8_t> out(image.size());
  // p / 255 > 0.5  <=>  2p > 255
  std::transform(image.pixels.begin(), image.pixels.end(), out.begin(),
                 [](std::uint8_t p) { return static_cast<std::uint8_t>(2 * p > 255); });
  return out;
}

std::vector<std::uint8_t> binarize(std::span<const double> features) {
  std::vector<std::uint8_t> out(features.size(), 0);
  if (features.empty()) return out;
  const auto [lo, hi] = std::minmax_element(features.begin(), features.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  for (std::size_t i = 0; i < features.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((features[i] - *lo) / range > 0.5);
  }
  return out;
}

}  // namespace qimg::imgdata
