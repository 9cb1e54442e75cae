#include "lmm/image_io.hpp"

#include "lmm/error.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace lmm::io {
namespace {

std::string extension(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return {};
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext;
}

void check_size(long long w, long long h, const std::string& path) {
    if (w <= 0 || h <= 0) throw IoError("'" + path + "': invalid dimensions");
    if (static_cast<unsigned long long>(w) * static_cast<unsigned long long>(h) > kMaxPixels)
        throw IoError("'" + path + "': image too large");
}

Raster read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    auto token = [&in, &path]() {
        std::string t;
        char c;
        while (in.get(c)) {
            if (c == '#') {
                std::string skip;
                std::getline(in, skip);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (!t.empty()) return t;
            } else {
                t.push_back(c);
            }
        }
        if (t.empty()) throw IoError("'" + path + "': truncated PGM header");
        return t;
    };
    if (token() != "P5") throw IoError("'" + path + "': only binary PGM (P5) is supported");
    long long w = 0, h = 0, maxval = 0;
    try {
        w = std::stoll(token());
        h = std::stoll(token());
        maxval = std::stoll(token());
    } catch (const std::logic_error&) {
        throw IoError("'" + path + "': malformed PGM header");
    }
    if (maxval <= 0 || maxval > 255) throw IoError("'" + path + "': only 8-bit PGM is supported");
    check_size(w, h, path);
    Raster r{static_cast<int>(w), static_cast<int>(h), 1, std::vector<std::uint8_t>(static_cast<std::size_t>(w * h))};
    in.read(reinterpret_cast<char*>(r.data.data()), static_cast<std::streamsize>(r.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(r.data.size())) throw IoError("'" + path + "': truncated PGM data");
    return r;
}

void write_pgm(const std::string& path, const Raster& r) {
    if (r.channels != 1) throw IoError("PGM output needs a single channel");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "P5\n" << r.width << ' ' << r.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(r.data.data()), static_cast<std::streamsize>(r.data.size()));
    if (!out) throw IoError("write failed for '" + path + "'");
}

Raster read_png(const std::string& path) {
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.c_str()))
        throw IoError("'" + path + "': " + image.message);
    const bool colour = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
    image.format = colour ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    if (static_cast<unsigned long long>(image.width) * image.height > kMaxPixels) {
        png_image_free(&image);
        throw IoError("'" + path + "': image too large");
    }
    Raster r{static_cast<int>(image.width), static_cast<int>(image.height), colour ? 3 : 1, {}};
    r.data.resize(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, r.data.data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw IoError("'" + path + "': " + msg);
    }
    return r;
}

void write_png(const std::string& path, const Raster& r) {
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(r.width);
    image.height = static_cast<png_uint_32>(r.height);
    image.format = r.channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&image, path.c_str(), 0, r.data.data(), 0, nullptr))
        throw IoError("cannot write '" + path + "': " + image.message);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    const std::array<char, 4> b{static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                                static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(b.data(), 4);
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint8_t to_byte(double v) {
    if (std::isnan(v)) return 0;
    return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
}

}  // namespace

ScaleMode parse_scale_mode(const std::string& s) {
    if (s == "clamp") return ScaleMode::clamp;
    if (s == "minmax") return ScaleMode::minmax;
    throw ConfigError("unknown scale mode '" + s + "' (expected clamp or minmax)");
}

Raster read_raster(const std::string& path) {
    const std::string ext = extension(path);
    if (ext == "pgm") return read_pgm(path);
    if (ext == "png") return read_png(path);
    throw IoError("'" + path + "': unsupported image format (expected .png or .pgm)");
}

void write_raster(const std::string& path, const Raster& raster) {
    const std::string ext = extension(path);
    if (ext == "pgm") return write_pgm(path, raster);
    if (ext == "png") return write_png(path, raster);
    throw IoError("'" + path + "': unsupported output format (expected .png or .pgm)");
}

GreyImage read_float_plane(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    unsigned char header[16];
    in.read(reinterpret_cast<char*>(header), 16);
    if (in.gcount() != 16 || std::memcmp(header, "LMMF", 4) != 0) throw IoError("'" + path + "': not a float plane");
    const std::uint32_t w = get_u32(header + 4);
    const std::uint32_t h = get_u32(header + 8);
    check_size(w, h, path);
    const float M = std::bit_cast<float>(get_u32(header + 12));
    if (!(M > 0.0f) || !std::isfinite(M)) throw IoError("'" + path + "': invalid M");
    std::vector<unsigned char> raw(static_cast<std::size_t>(w) * h * 4);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) throw IoError("'" + path + "': truncated data");
    std::vector<double> samples(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = std::bit_cast<float>(get_u32(raw.data() + 4 * i));
    return GreyImage(static_cast<int>(w), static_cast<int>(h), std::move(samples), M);
}

void write_float_plane(const std::string& path, const GreyImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out.write("LMMF", 4);
    put_u32(out, static_cast<std::uint32_t>(img.width()));
    put_u32(out, static_cast<std::uint32_t>(img.height()));
    put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(img.M())));
    for (double v : img.samples()) put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    if (!out) throw IoError("write failed for '" + path + "'");
}

GreyImage load_grey(const std::string& path, double M, bool invert) {
    if (extension(path) == "f32") return read_float_plane(path);
    const Raster r = read_raster(path);
    if (r.channels == 3) return luminance_image(load_rgb(path), M);
    GreyImage img(r.width, r.height, 0.0, M);
    auto dst = img.samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = invert ? (M - 1.0) - r.data[i] : r.data[i];
    return img;
}

void save_grey(const std::string& path, const GreyImage& img, ScaleMode mode, bool invert) {
    if (extension(path) == "f32") return write_float_plane(path, img);
    Raster r{img.width(), img.height(), 1, std::vector<std::uint8_t>(img.size())};
    const auto src = img.samples();
    double lo = 0.0, hi = 255.0;
    if (mode == ScaleMode::minmax) {
        lo = kPosInf, hi = kNegInf;
        for (double v : src)
            if (std::isfinite(v)) lo = std::min(lo, v), hi = std::max(hi, v);
        if (!(lo < hi)) lo = hi = std::isfinite(lo) ? lo : 0.0;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        double v = src[i];
        if (mode == ScaleMode::minmax) {
            if (v == kNegInf) v = 0.0;
            else if (v == kPosInf || v >= img.M()) v = 255.0;
            else v = hi > lo ? 255.0 * (v - lo) / (hi - lo) : 0.0;
        }
        if (invert) v = 255.0 - v;
        r.data[i] = to_byte(v);
    }
    write_raster(path, r);
}

RgbImage load_rgb(const std::string& path) {
    const Raster r = read_raster(path);
    RgbImage rgb(r.width, r.height);
    for (std::size_t i = 0; i < rgb.size(); ++i) {
        if (r.channels == 3) {
            rgb.r[i] = r.data[3 * i];
            rgb.g[i] = r.data[3 * i + 1];
            rgb.b[i] = r.data[3 * i + 2];
        } else {
            rgb.r[i] = rgb.g[i] = rgb.b[i] = r.data[i];
        }
    }
    return rgb;
}

void save_rgb(const std::string& path, const RgbImage& rgb) {
    Raster r{rgb.width, rgb.height, 3, std::vector<std::uint8_t>(rgb.size() * 3)};
    for (std::size_t i = 0; i < rgb.size(); ++i) {
        r.data[3 * i] = to_byte(rgb.r[i]);
        r.data[3 * i + 1] = to_byte(rgb.g[i]);
        r.data[3 * i + 2] = to_byte(rgb.b[i]);
    }
    write_raster(path, r);
}

BinaryMask load_mask(const std::string& path) {
    const Raster r = read_raster(path);
    BinaryMask m(r.width, r.height);
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool set = false;
        for (int c = 0; c < r.channels; ++c) set = set || r.data[i * r.channels + c] != 0;
        m.set(i, set);
    }
    return m;
}

void save_mask(const std::string& path, const BinaryMask& mask) {
    Raster r{mask.width(), mask.height(), 1, std::vector<std::uint8_t>(mask.size())};
    for (std::size_t i = 0; i < mask.size(); ++i) r.data[i] = mask.at(i) ? 255 : 0;
    write_raster(path, r);
}

}  // namespace lmm::io
