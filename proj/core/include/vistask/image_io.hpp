#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vistask/canvas.hpp"

namespace vistask {

// Lossless encoders with fixed parameters: equal canvases encode to equal
// bytes. PNG is 8-bit RGB, non-interlaced, filter 0 scanlines, one IDAT,
// fixed deflate level. PPM is the ASCII P3 form, one pixel per line.
std::vector<std::uint8_t> encode_png(const Canvas& canvas);
std::string encode_ppm(const Canvas& canvas);

// Decoders for round-trips and for scoring externally produced frames.
// PNG support covers 8-bit RGB / RGBA (alpha dropped), all five scanline
// filters, non-interlaced only.
Canvas decode_png(const std::vector<std::uint8_t>& bytes);
Canvas decode_ppm(const std::string& text);

// Extension-dispatched file helpers (".png" or ".ppm").
void save_canvas(const Canvas& canvas, const std::filesystem::path& path);
Canvas load_canvas(const std::filesystem::path& path);

}  // namespace vistask
