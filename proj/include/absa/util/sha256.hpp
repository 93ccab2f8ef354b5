#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace absa::util {

using Sha256Digest = std::array<std::uint8_t, 32>;

Sha256Digest sha256(const void* data, std::size_t len);
Sha256Digest sha256(std::string_view data);

std::string to_hex(const Sha256Digest& digest);

}  // namespace absa::util
