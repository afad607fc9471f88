#include "vistask/canvas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace vistask {

namespace {

inline std::uint8_t round_half_up(double v) {
    double r = std::floor(v + 0.5);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

// Exact path for integer block ratios: round-half-up of sum/block without
// going through floating point.
Canvas downscale_blocks(const Canvas& src, int target_w, int target_h, int bx, int by) {
    Canvas out(target_w, target_h);
    const std::uint64_t block = static_cast<std::uint64_t>(bx) * by;
    for (int ty = 0; ty < target_h; ++ty) {
        for (int tx = 0; tx < target_w; ++tx) {
            std::uint64_t sr = 0, sg = 0, sb = 0;
            for (int dy = 0; dy < by; ++dy) {
                for (int dx = 0; dx < bx; ++dx) {
                    const Color c = src.at(tx * bx + dx, ty * by + dy);
                    sr += c.r; sg += c.g; sb += c.b;
                }
            }
            out.at(tx, ty) = {
                static_cast<std::uint8_t>((2 * sr + block) / (2 * block)),
                static_cast<std::uint8_t>((2 * sg + block) / (2 * block)),
                static_cast<std::uint8_t>((2 * sb + block) / (2 * block))};
        }
    }
    return out;
}

}  // namespace

Canvas downscale(const Canvas& src, int target_w, int target_h) {
    if (target_w <= 0 || target_h <= 0)
        throw std::invalid_argument("downscale: target dimensions must be positive");
    if (target_w == src.width() && target_h == src.height()) return src;

    if (src.width() % target_w == 0 && src.height() % target_h == 0)
        return downscale_blocks(src, target_w, target_h,
                                src.width() / target_w, src.height() / target_h);

    // General area-weighted average over the fractional source rectangle of
    // each target pixel.
    Canvas out(target_w, target_h);
    const double sx = static_cast<double>(src.width()) / target_w;
    const double sy = static_cast<double>(src.height()) / target_h;
    for (int ty = 0; ty < target_h; ++ty) {
        const double y0 = ty * sy, y1 = (ty + 1) * sy;
        for (int tx = 0; tx < target_w; ++tx) {
            const double x0 = tx * sx, x1 = (tx + 1) * sx;
            double wr = 0, wg = 0, wb = 0, area = 0;
            for (int y = static_cast<int>(std::floor(y0));
                 y < static_cast<int>(std::ceil(y1)); ++y) {
                const double hy = std::min<double>(y + 1, y1) - std::max<double>(y, y0);
                if (hy <= 0) continue;
                for (int x = static_cast<int>(std::floor(x0));
                     x < static_cast<int>(std::ceil(x1)); ++x) {
                    const double wx = std::min<double>(x + 1, x1) - std::max<double>(x, x0);
                    if (wx <= 0) continue;
                    const double w = wx * hy;
                    const Color c = src.at(std::min(x, src.width() - 1),
                                           std::min(y, src.height() - 1));
                    wr += w * c.r; wg += w * c.g; wb += w * c.b;
                    area += w;
                }
            }
            out.at(tx, ty) = {round_half_up(wr / area), round_half_up(wg / area),
                              round_half_up(wb / area)};
        }
    }
    return out;
}

}  // namespace vistask
