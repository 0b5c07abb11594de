#pragma once

#include <string>

#include "klr/quiver.hpp"

namespace klr {

// bumped when any serialized artifact changes shape
inline constexpr const char* kCodeVersion = "klrwb-1";

std::string fnv1a64_hex(const std::string& data);

// cache directory resolution: explicit flag, then KLRWB_CACHE, then default
std::string resolve_cache_dir(const std::string& cliOverride);
void ensure_directory(const std::string& dir);
void clear_cache(const std::string& dir);

// content-addressed table file for (quiver + orientation, beta)
std::string table_cache_path(const std::string& dir, const Quiver& q, const Weight& beta);

bool file_exists(const std::string& path);

}  // namespace klr
