#include "absa/util/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace absa::util {

Sha256Digest sha256(const void* data, std::size_t len) {
  Sha256Digest out{};
  unsigned int out_len = 0;
  if (EVP_Digest(data, len, out.data(), &out_len, EVP_sha256(), nullptr) != 1 ||
      out_len != out.size()) {
    throw std::runtime_error("sha256 digest failed");
  }
  return out;
}

Sha256Digest sha256(std::string_view data) {
  return sha256(data.data(), data.size());
}

std::string to_hex(const Sha256Digest& digest) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  s.reserve(64);
  for (std::uint8_t b : digest) {
    s.push_back(hex[b >> 4]);
    s.push_back(hex[b & 0xf]);
  }
  return s;
}

}  // namespace absa::util
