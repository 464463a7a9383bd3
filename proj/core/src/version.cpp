#include "smfp/version.hpp"

#include <fstream>
#include <sstream>

#include "smfp/errors.hpp"

namespace smfp {

std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure on file: " + path);
  }
  return buf.str();
}

std::uint64_t file_fnv1a(const std::string& path) {
  return fnv1a64(read_file(path));
}

}  // namespace smfp
