#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "taskfill/maskgen.hpp"

namespace taskfill {

/// Interleaved 8-bit pixels; channels is 1 (grayscale) or 3 (RGB).
struct Image8 {
    int width = 0;
    int height = 0;
    int channels = 3;
    std::vector<uint8_t> pixels;
};

std::vector<uint8_t> encode_png(const Image8& img);
Image8 decode_png(const std::vector<uint8_t>& bytes, int channels);

void write_png(const std::filesystem::path& path, const Image8& img);
Image8 read_png(const std::filesystem::path& path, int channels);

/// [3, H, W] in [-1, 1] -> 8-bit RGB (rounded, clamped).
Image8 image_to_rgb8(const torch::Tensor& image);
/// 8-bit RGB -> [3, H, W] in [-1, 1].
torch::Tensor rgb8_to_image(const Image8& img);

/// Masks travel as {0, 255} grayscale and load with a threshold at 128.
Image8 mask_to_gray8(const Mask& m);
Mask gray8_to_mask(const Image8& img);

std::string base64_encode(const std::vector<uint8_t>& data);
/// Throws std::invalid_argument on malformed input.
std::vector<uint8_t> base64_decode(std::string_view text);

}  // namespace taskfill
