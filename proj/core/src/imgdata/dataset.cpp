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

#include "qimg/imgdata/dataset.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qimg/common/rng.hpp"

namespace qimg::imgdata {

LabeledDataset filter_binary(std::span<const GrayImage> images, std::span<const std::uint8_t> labels,
                             int positive, int negative, std::string name) {
  if (images.size() != labels.size()) {
    throw std::invalid_argument(std::to_string(images.size()) + " images but " +
                                std::to_string(labels.size()) + " labels");
  }
  LabeledDataset out;
  out.name = std::move(name);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int label = labels[i];
    if (label > 9) throw std::invalid_argument("class label " + std::to_string(label) + " outside [0, 9]");
    if (label == positive || label == negative) {
      out.images.push_back(images[i]);
      out.labels.push_back(label == positive ? 1 : -1);
    }
  }
  return out;
}

LabeledDataset subsample(const LabeledDataset& dataset, std::size_t n, std::uint64_t seed) {
  if (n > dataset.size()) {
    throw std::invalid_argument("cannot draw " + std::to_string(n) + " items from " +
                                std::to_string(dataset.size()));
  }
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span(order));
  LabeledDataset out;
  out.name = dataset.name;
  out.images.reserve(n);
  out.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.images.push_back(dataset.images[order[i]]);
    out.labels.push_back(dataset.labels[order[i]]);
  }
  return out;
}

LabeledDataset downscale(const LabeledDataset& dataset, int out_width, int out_height) {
  LabeledDataset out;
  out.name = dataset.name;
  out.labels = dataset.labels;
  out.images.reserve(dataset.size());
  for (const GrayImage& img : dataset.images) out.images.push_back(downscale(img, out_width, out_height));
  return out;
}

std::string to_records(const LabeledDataset& dataset) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const GrayImage& img = dataset.images[i];
    os << dataset.labels[i] << ',' << img.width << ',' << img.height;
    for (std::uint8_t p : img.pixels) os << ',' << static_cast<int>(p);
    os << '\n';
  }
  return os.str();
}

LabeledDataset from_records(std::string_view text, std::string name) {
  LabeledDataset out;
  out.name = std::move(name);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<int> fields;
    const char* p = line.data();
    const char* stop = line.data() + line.size();
    while (p < stop) {
      int v = 0;
      const auto [next, ec] = std::from_chars(p, stop, v);
      if (ec != std::errc{}) throw std::runtime_error("record line " + std::to_string(line_no) + ": bad number");
      fields.push_back(v);
      p = next;
      if (p < stop) {
        if (*p != ',') throw std::runtime_error("record line " + std::to_string(line_no) + ": expected ','");
        ++p;
      }
    }
    if (fields.size() < 3) throw std::runtime_error("record line " + std::to_string(line_no) + ": too short");
    const int label = fields[0];
    if (label != 1 && label != -1) {
      throw std::runtime_error("record line " + std::to_string(line_no) + ": label must be +1 or -1");
    }
    std::vector<std::uint8_t> px;
    px.reserve(fields.size() - 3);
    for (std::size_t i = 3; i < fields.size(); ++i) {
      if (fields[i] < 0 || fields[i] > 255) {
        throw std::runtime_error("record line " + std::to_string(line_no) + ": pixel outside [0, 255]");
      }
      px.push_back(static_cast<std::uint8_t>(fields[i]));
    }
    out.images.emplace_back(fields[1], fields[2], std::move(px));
    out.labels.push_back(label);
  }
  return out;
}

}  // namespace qimg::imgdata
