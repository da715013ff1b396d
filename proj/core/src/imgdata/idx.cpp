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

#include "qimg/imgdata/idx.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>

namespace qimg::imgdata {
namespace {

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint32_t u32(const char* what) {
    if (bytes_.size() - pos_ < 4) {
      throw IdxFormatError(std::string("stream ends inside header field '") + what + "'");
    }
    const std::uint32_t v = (std::uint32_t{bytes_[pos_]} << 24) | (std::uint32_t{bytes_[pos_ + 1]} << 16) |
                            (std::uint32_t{bytes_[pos_ + 2]} << 8) | std::uint32_t{bytes_[pos_ + 3]};
    pos_ += 4;
    return v;
  }

  std::span<const std::uint8_t> payload(std::uint64_t count) {
    const std::uint64_t left = bytes_.size() - pos_;
    if (count > left) {
      throw IdxLengthError("payload truncated: header promises " + std::to_string(count) +
                           " bytes, stream holds " + std::to_string(left));
    }
    auto out = bytes_.subspan(pos_, static_cast<std::size_t>(count));
    pos_ += static_cast<std::size_t>(count);
    return out;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void expect_magic(Reader& r, std::uint32_t want) {
  const std::uint32_t magic = r.u32("magic");
  if (magic != want) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "bad IDX magic 0x%08x (expected 0x%08x)", magic, want);
    throw IdxFormatError(buf);
  }
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

}  // namespace

std::vector<GrayImage> parse_idx_images(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  expect_magic(r, kIdxImagesMagic);
  const std::uint32_t count = r.u32("count");
  const std::uint32_t rows = r.u32("rows");
  const std::uint32_t cols = r.u32("cols");
  const std::uint64_t per_image = std::uint64_t{rows} * cols;
  const auto payload = r.payload(per_image * count);
  std::vector<GrayImage> images;
  images.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    auto px = payload.subspan(static_cast<std::size_t>(i * per_image), static_cast<std::size_t>(per_image));
    images.emplace_back(static_cast<int>(cols), static_cast<int>(rows),
                        std::vector<std::uint8_t>(px.begin(), px.end()));
  }
  return images;
}

std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  expect_magic(r, kIdxLabelsMagic);
  const std::uint32_t count = r.u32("count");
  const auto payload = r.payload(count);
  return {payload.begin(), payload.end()};
}

std::vector<std::uint8_t> write_idx_images(std::span<const GrayImage> images) {
  const int rows = images.empty() ? 0 : images.front().height;
  const int cols = images.empty() ? 0 : images.front().width;
  std::vector<std::uint8_t> out;
  out.reserve(16 + images.size() * static_cast<std::size_t>(rows) * cols);
  put_u32(out, kIdxImagesMagic);
  put_u32(out, static_cast<std::uint32_t>(images.size()));
  put_u32(out, static_cast<std::uint32_t>(rows));
  put_u32(out, static_cast<std::uint32_t>(cols));
  for (const GrayImage& img : images) {
    if (img.width != cols || img.height != rows) {
      throw std::invalid_argument("IDX image files need uniformly sized images");
    }
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  }
  return out;
}

std::vector<std::uint8_t> write_idx_labels(std::span<const std::uint8_t> labels) {
  std::vector<std::uint8_t> out;
  out.reserve(8 + labels.size());
  put_u32(out, kIdxLabelsMagic);
  put_u32(out, static_cast<std::uint32_t>(labels.size()));
  out.insert(out.end(), labels.begin(), labels.end());
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace qimg::imgdata
