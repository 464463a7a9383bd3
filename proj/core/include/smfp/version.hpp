#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace smfp {

inline constexpr std::string_view kVersion = "0.1.0";

// 64-bit FNV-1a over a byte sequence. Used to fingerprint configs and the
// bundled data files so runs can be tied to exact inputs.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

// Lower-case hex rendering, zero-padded to 16 digits.
std::string to_hex(std::uint64_t value);

// FNV-1a of a whole file's raw bytes. Throws IoError if unreadable.
std::uint64_t file_fnv1a(const std::string& path);

// Reads a whole file into memory. Throws IoError if unreadable.
std::string read_file(const std::string& path);

}  // namespace smfp
