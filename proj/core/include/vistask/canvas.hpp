#pragma once

#include <cstdint>
#include <vector>

namespace vistask {

struct Color {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(Color, Color) = default;
};

namespace colors {
inline constexpr Color white{255, 255, 255};
inline constexpr Color black{0, 0, 0};
inline constexpr Color blue{0, 0, 255};
inline constexpr Color red{255, 0, 0};
inline constexpr Color gray{128, 128, 128};
}  // namespace colors

// Row-major RGB raster. Pixel (x, y) has its sample point at the integer
// coordinate (x, y): a point primitive landing exactly on (x, y) covers that
// pixel and no other.
class Canvas {
public:
    Canvas() = default;
    Canvas(int width, int height, Color fill = colors::white)
        : width_(width), height_(height),
          pixels_(static_cast<std::size_t>(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }

    Color& at(int x, int y) { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
    Color at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    const std::vector<Color>& pixels() const { return pixels_; }
    std::vector<Color>& pixels() { return pixels_; }

    friend bool operator==(const Canvas&, const Canvas&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Color> pixels_;
};

// Area-average (box filter) downscale with round-half-up channel rounding.
// An exact divisor ratio (448 -> 224) reduces to integer block averaging.
Canvas downscale(const Canvas& src, int target_w, int target_h);

}  // namespace vistask
