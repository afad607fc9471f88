#include "vistask/image_io.hpp"

#include <zlib.h>

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vistask {

namespace {

// Encoder parameters are frozen: changing either breaks byte-exact reruns.
constexpr int kDeflateLevel = 6;

void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t read_u32_be(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  const std::uint8_t* data, std::size_t len) {
    put_u32_be(out, static_cast<std::uint32_t>(len));
    const std::size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    if (len) out.insert(out.end(), data, data + len);
    std::uint32_t crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, out.data() + start, static_cast<uInt>(4 + len));
    put_u32_be(out, crc);
}

std::vector<std::uint8_t> zlib_deflate(const std::vector<std::uint8_t>& in, int level) {
    uLongf bound = compressBound(static_cast<uLong>(in.size()));
    std::vector<std::uint8_t> out(bound);
    if (compress2(out.data(), &bound, in.data(), static_cast<uLong>(in.size()), level) != Z_OK)
        throw std::runtime_error("png encode: deflate failed");
    out.resize(bound);
    return out;
}

std::vector<std::uint8_t> zlib_inflate(const std::vector<std::uint8_t>& in,
                                       std::size_t expected) {
    std::vector<std::uint8_t> out(expected);
    uLongf len = static_cast<uLongf>(expected);
    if (uncompress(out.data(), &len, in.data(), static_cast<uLong>(in.size())) != Z_OK ||
        len != expected)
        throw std::runtime_error("png decode: inflate failed");
    return out;
}

inline std::uint8_t paeth(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
    const int p = int(a) + int(b) - int(c);
    const int pa = std::abs(p - int(a));
    const int pb = std::abs(p - int(b));
    const int pc = std::abs(p - int(c));
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Canvas& canvas) {
    const int w = canvas.width(), h = canvas.height();
    if (w <= 0 || h <= 0) throw std::invalid_argument("encode_png: empty canvas");

    // filter byte 0 (None) per scanline
    std::vector<std::uint8_t> raw;
    raw.reserve(static_cast<std::size_t>(h) * (1 + 3 * static_cast<std::size_t>(w)));
    for (int y = 0; y < h; ++y) {
        raw.push_back(0);
        for (int x = 0; x < w; ++x) {
            const Color c = canvas.at(x, y);
            raw.push_back(c.r);
            raw.push_back(c.g);
            raw.push_back(c.b);
        }
    }
    const std::vector<std::uint8_t> idat = zlib_deflate(raw, kDeflateLevel);

    std::vector<std::uint8_t> out;
    out.reserve(idat.size() + 128);
    static const std::uint8_t sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    out.insert(out.end(), sig, sig + 8);

    std::uint8_t ihdr[13];
    ihdr[0] = std::uint8_t(w >> 24); ihdr[1] = std::uint8_t(w >> 16);
    ihdr[2] = std::uint8_t(w >> 8);  ihdr[3] = std::uint8_t(w);
    ihdr[4] = std::uint8_t(h >> 24); ihdr[5] = std::uint8_t(h >> 16);
    ihdr[6] = std::uint8_t(h >> 8);  ihdr[7] = std::uint8_t(h);
    ihdr[8] = 8;    // bit depth
    ihdr[9] = 2;    // color type: truecolor RGB
    ihdr[10] = 0;   // compression
    ihdr[11] = 0;   // filter method
    ihdr[12] = 0;   // no interlace
    append_chunk(out, "IHDR", ihdr, sizeof ihdr);
    append_chunk(out, "IDAT", idat.data(), idat.size());
    append_chunk(out, "IEND", nullptr, 0);
    return out;
}

Canvas decode_png(const std::vector<std::uint8_t>& bytes) {
    static const std::uint8_t sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    if (bytes.size() < 8 + 25 || std::memcmp(bytes.data(), sig, 8) != 0)
        throw std::runtime_error("png decode: bad signature");

    std::size_t pos = 8;
    int w = 0, h = 0, channels = 0;
    std::vector<std::uint8_t> idat;
    bool seen_ihdr = false, seen_iend = false;
    while (pos + 8 <= bytes.size() && !seen_iend) {
        const std::uint32_t len = read_u32_be(&bytes[pos]);
        if (pos + 12 + len > bytes.size()) throw std::runtime_error("png decode: truncated chunk");
        const char* type = reinterpret_cast<const char*>(&bytes[pos + 4]);
        const std::uint8_t* data = &bytes[pos + 8];
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw std::runtime_error("png decode: bad IHDR");
            w = static_cast<int>(read_u32_be(data));
            h = static_cast<int>(read_u32_be(data + 4));
            const int depth = data[8], color = data[9], interlace = data[12];
            if (depth != 8 || (color != 2 && color != 6) || interlace != 0)
                throw std::runtime_error(
                    "png decode: only 8-bit RGB/RGBA non-interlaced supported");
            channels = color == 2 ? 3 : 4;
            seen_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            seen_iend = true;
        }
        pos += 12 + len;
    }
    if (!seen_ihdr || w <= 0 || h <= 0) throw std::runtime_error("png decode: missing IHDR");

    const std::size_t stride = static_cast<std::size_t>(w) * channels;
    std::vector<std::uint8_t> raw =
        zlib_inflate(idat, static_cast<std::size_t>(h) * (stride + 1));

    Canvas out(w, h);
    std::vector<std::uint8_t> prev(stride, 0), cur(stride);
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* line = &raw[static_cast<std::size_t>(y) * (stride + 1)];
        const std::uint8_t filter = line[0];
        const std::uint8_t* src = line + 1;
        for (std::size_t i = 0; i < stride; ++i) {
            const std::uint8_t left = i >= std::size_t(channels) ? cur[i - channels] : 0;
            const std::uint8_t up = prev[i];
            const std::uint8_t ul = i >= std::size_t(channels) ? prev[i - channels] : 0;
            std::uint8_t v = src[i];
            switch (filter) {
                case 0: break;
                case 1: v = std::uint8_t(v + left); break;
                case 2: v = std::uint8_t(v + up); break;
                case 3: v = std::uint8_t(v + ((int(left) + int(up)) >> 1)); break;
                case 4: v = std::uint8_t(v + paeth(left, up, ul)); break;
                default: throw std::runtime_error("png decode: bad filter type");
            }
            cur[i] = v;
        }
        for (int x = 0; x < w; ++x)
            out.at(x, y) = {cur[x * channels], cur[x * channels + 1], cur[x * channels + 2]};
        std::swap(prev, cur);
    }
    return out;
}

std::string encode_ppm(const Canvas& canvas) {
    std::string out = "P3\n" + std::to_string(canvas.width()) + " " +
                      std::to_string(canvas.height()) + "\n255\n";
    for (int y = 0; y < canvas.height(); ++y) {
        for (int x = 0; x < canvas.width(); ++x) {
            const Color c = canvas.at(x, y);
            out += std::to_string(c.r);
            out += ' ';
            out += std::to_string(c.g);
            out += ' ';
            out += std::to_string(c.b);
            out += '\n';
        }
    }
    return out;
}

Canvas decode_ppm(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    in >> magic;
    if (magic != "P3") throw std::runtime_error("ppm decode: expected P3");
    int w = 0, h = 0, maxval = 0;
    in >> w >> h >> maxval;
    if (!in || w <= 0 || h <= 0 || maxval != 255)
        throw std::runtime_error("ppm decode: bad header");
    Canvas out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int r, g, b;
            in >> r >> g >> b;
            if (!in) throw std::runtime_error("ppm decode: truncated pixels");
            out.at(x, y) = {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                            static_cast<std::uint8_t>(b)};
        }
    return out;
}

void save_canvas(const Canvas& canvas, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for write: " + path.string());
    if (path.extension() == ".ppm") {
        const std::string txt = encode_ppm(canvas);
        f.write(txt.data(), static_cast<std::streamsize>(txt.size()));
    } else {
        const auto bytes = encode_png(canvas);
        f.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
    }
    if (!f) throw std::runtime_error("write failed: " + path.string());
}

Canvas load_canvas(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    if (path.extension() == ".ppm")
        return decode_ppm(std::string(bytes.begin(), bytes.end()));
    return decode_png(bytes);
}

}  // namespace vistask
