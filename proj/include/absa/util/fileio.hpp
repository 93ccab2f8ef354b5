#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace absa::util {

std::string read_file(const std::filesystem::path& path);

// Writes to <path>.tmp then renames, so readers never observe partial files.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace absa::util
