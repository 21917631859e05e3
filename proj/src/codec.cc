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

#include "gwin/codec.hpp"

#include <fstream>
#include <sstream>

#include "gwin/error.hpp"

namespace gwin {

std::uint8_t ByteReader::get_u8() {
  if (pos_ >= in_.size()) throw FormatError("unexpected end of data");
  return static_cast<std::uint8_t>(in_[pos_++]);
}

std::uint64_t ByteReader::get_varint() {
  std::uint64_t x = 0;
  for (unsigned shift = 0; shift < 64; shift += 7) {
    const std::uint8_t b = get_u8();
    x |= static_cast<std::uint64_t>(b & 0x7f) << shift;
    if ((b & 0x80) == 0) return x;
  }
  throw FormatError("varint longer than 64 bits");
}

std::uint64_t ByteReader::get_u64() {
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(get_u8()) << (8 * i);
  return x;
}

std::uint64_t ByteReader::get_bounded(std::uint64_t limit, const char* what) {
  const std::uint64_t x = get_varint();
  if (x > limit) throw FormatError(std::string(what) + " out of range");
  return x;
}

void ByteReader::expect(std::string_view magic) {
  if (remaining() < magic.size() || in_.substr(pos_, magic.size()) != magic) {
    throw FormatError("bad magic, expected " + std::string(magic));
  }
  pos_ += magic.size();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("write to " + path + " failed");
}

}  // namespace gwin
