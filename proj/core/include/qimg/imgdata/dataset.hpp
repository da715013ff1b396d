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
#include <string>
#include <string_view>
#include <vector>

#include "qimg/imgdata/image.hpp"

namespace qimg::imgdata {

/// Images paired with +1/-1 labels.
struct LabeledDataset {
  std::string name;
  std::vector<GrayImage> images;
  std::vector<int> labels;

  std::size_t size() const { return images.size(); }
  bool empty() const { return images.empty(); }
};

/// Keeps items labeled `positive` or `negative` (class ids in [0, 9]) and maps
/// them to +1 / -1. Order is preserved.
LabeledDataset filter_binary(std::span<const GrayImage> images, std::span<const std::uint8_t> labels,
                             int positive = 0, int negative = 3, std::string name = {});

/// First n items of a seeded permutation. Throws std::invalid_argument when
/// n > dataset.size().
LabeledDataset subsample(const LabeledDataset& dataset, std::size_t n, std::uint64_t seed);

LabeledDataset downscale(const LabeledDataset& dataset, int out_width, int out_height);

/// Line records `label,width,height,p0,p1,...`.
std::string to_records(const LabeledDataset& dataset);
LabeledDataset from_records(std::string_view text, std::string name = {});

}  // namespace qimg::imgdata
