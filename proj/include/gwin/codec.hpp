/* Copyright 2026 The gwin Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace gwin {

// Append-only byte buffer with LEB128 varints and little-endian fixed words.
class ByteWriter {
 public:
  void put_u8(std::uint8_t b) { out_.push_back(static_cast<char>(b)); }
  void put_varint(std::uint64_t x) {
    while (x >= 0x80) {
      put_u8(static_cast<std::uint8_t>(x | 0x80));
      x >>= 7;
    }
    put_u8(static_cast<std::uint8_t>(x));
  }
  void put_u64(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) put_u8(static_cast<std::uint8_t>(x >> (8 * i)));
  }
  void put_bytes(std::string_view s) { out_.append(s); }

  const std::string& bytes() const { return out_; }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

// Cursor over a byte buffer. Every read throws FormatError past the end or on
// an overlong varint.
class ByteReader {
 public:
  explicit ByteReader(std::string_view in) : in_(in) {}

  std::uint8_t get_u8();
  std::uint64_t get_varint();
  std::uint64_t get_u64();
  // Reads a varint and checks it against an upper bound.
  std::uint64_t get_bounded(std::uint64_t limit, const char* what);
  void expect(std::string_view magic);

  bool done() const { return pos_ == in_.size(); }
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

// Whole-file helpers; throw DataError when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace gwin
