#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace balcov {

inline constexpr const char* kVersion = "0.1.0";

/// 64-bit FNV-1a content digest, used to fingerprint input files.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

/// Reproducibility header attached to every tool output: tool version,
/// subcommand, digests of the raw input bytes, and the seed in effect.
struct RunManifest {
  std::string version = kVersion;
  std::string subcommand;
  std::map<std::string, std::string> input_digests; // input name -> hex digest
  std::uint64_t seed = 0;
};

} // namespace balcov
