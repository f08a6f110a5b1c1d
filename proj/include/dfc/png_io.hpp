#pragma once

#include <filesystem>

#include "dfc/image.hpp"

namespace dfc {

void write_png(const ImageRgb& image, const std::filesystem::path& path);

/// Reads an 8-bit PNG; gray and alpha variants are expanded to RGB.
ImageRgb read_png(const std::filesystem::path& path);

} // namespace dfc
