#pragma once

#include <filesystem>
#include <string>

#include "nlwave/field.hpp"

namespace nlwave {

/// Field snapshot: a binary blob of complex coefficients (little-endian,
/// 8-byte real followed by 8-byte imaginary part, modes in k-lexicographic
/// order with k1 slowest) next to a JSON sidecar {d, K, real_flag, component}.
void write_snapshot(const TorusField& f, const std::filesystem::path& bin_path,
                    const std::filesystem::path& json_path,
                    const std::string& component);

TorusField read_snapshot(const std::filesystem::path& bin_path,
                         const std::filesystem::path& json_path,
                         std::string* component = nullptr);

}  // namespace nlwave
