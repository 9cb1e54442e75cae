#pragma once

// File formats: 8-bit PGM (P5), 8-bit PNG (grey, grey+alpha, RGB, RGBA) and a
// raw float plane for maps whose values leave [0, M):
//
//   offset 0   4 bytes  magic "LMMF"
//   offset 4   uint32   width   (little endian)
//   offset 8   uint32   height  (little endian)
//   offset 12  float32  M       (little endian)
//   offset 16  width*height float32 samples, row-major, little endian
//
// The format is chosen from the file extension (.pgm, .png, .f32).

#include "lmm/image.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lmm::io {

inline constexpr std::size_t kMaxPixels = std::size_t{1} << 26;

/// 8-bit raster as decoded from disk (1 or 3 channels, interleaved).
struct Raster {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> data;
};

enum class ScaleMode {
    clamp,   // round to the nearest integer and clamp to [0, 255]
    minmax,  // stretch finite values linearly onto [0, 255]
};

ScaleMode parse_scale_mode(const std::string& s);

Raster read_raster(const std::string& path);
void write_raster(const std::string& path, const Raster& raster);

GreyImage read_float_plane(const std::string& path);
void write_float_plane(const std::string& path, const GreyImage& img);

/// Grey image in the LIP scale. Float planes are read as stored. 8-bit grey
/// files map value g to g, or to (M-1) - g with `invert`. Colour files are
/// converted with the LIP luminance formula (already inverted).
GreyImage load_grey(const std::string& path, double M = kDefaultM, bool invert = false);
void save_grey(const std::string& path, const GreyImage& img, ScaleMode mode = ScaleMode::clamp,
               bool invert = false);

RgbImage load_rgb(const std::string& path);
void save_rgb(const std::string& path, const RgbImage& rgb);

/// Non-zero pixels (in any channel) are set.
BinaryMask load_mask(const std::string& path);
/// Written as 0 / 255 grey.
void save_mask(const std::string& path, const BinaryMask& mask);

}  // namespace lmm::io
