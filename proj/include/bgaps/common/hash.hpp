#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace bgaps {

// 64-bit FNV-1a digest, rendered as 16 lowercase hex digits.
std::string content_hash(std::string_view bytes);
std::string file_hash(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace bgaps
