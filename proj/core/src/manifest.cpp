#include "balcov/manifest.hpp"

#include <cstdio>

namespace balcov {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view data) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buffer;
}

} // namespace balcov
