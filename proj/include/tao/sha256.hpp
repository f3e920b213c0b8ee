#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tao {

std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& s);
std::string sha256_hex(const std::vector<std::uint8_t>& v);

}  // namespace tao
