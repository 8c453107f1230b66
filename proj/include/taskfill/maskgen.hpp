#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <torch/torch.h>

namespace taskfill {

using Rng = std::mt19937_64;

/// Binary H x W grid; 1 marks the region to inpaint.
class Mask {
public:
    Mask() = default;
    Mask(int height, int width, uint8_t fill = 0);

    int height() const { return h_; }
    int width() const { return w_; }
    bool empty() const { return area() == 0; }

    uint8_t at(int y, int x) const { return cells_[static_cast<size_t>(y * w_ + x)]; }
    void set(int y, int x, uint8_t v) { cells_[static_cast<size_t>(y * w_ + x)] = v ? 1 : 0; }

    int64_t area() const;
    bool subset_of(const Mask& other) const;
    Mask inverted() const;
    const std::vector<uint8_t>& cells() const { return cells_; }

    /// [1, H, W] float tensor of {0, 1}.
    torch::Tensor to_tensor() const;
    /// Threshold at 0.5 on a [H, W] or [1, H, W] tensor.
    static Mask from_tensor(const torch::Tensor& t);

    friend bool operator==(const Mask& a, const Mask& b) {
        return a.h_ == b.h_ && a.w_ == b.w_ && a.cells_ == b.cells_;
    }

private:
    int h_ = 0;
    int w_ = 0;
    std::vector<uint8_t> cells_;
};

struct Box {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;  // exclusive
    int y1 = 0;  // exclusive

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
    friend bool operator==(const Box&, const Box&) = default;
};

/// Tight bounding box of the 1-pixels. Throws on an empty mask.
Box tight_box(const Mask& m);

struct BrushParams {
    int min_strokes = 1;
    int max_strokes = 4;
    int min_width = 2;
    int max_width = 8;
    int min_walk = 4;
    int max_walk = 20;
    double rect_probability = 0.3;
    double min_coverage = 0.05;
    double max_coverage = 0.50;
    int max_tries = 100;
};

Mask random_freeform_mask(int h, int w, Rng& rng, const BrushParams& params = {});

Mask bbox_mask(const Box& box, int h, int w);

/// `iterations` rounds of binary dilation with a k x k square structuring element, clipped at the border.
Mask dilate(const Mask& m, int kernel_size, int iterations);

/// area(original) / area(dilated); 1 means the dilated mask fits the shape exactly.
double fitting_ratio(const Mask& original, const Mask& dilated);

struct MaskPair {
    Mask original;
    Mask dilated;
    int kernel_size = 1;
    int iterations = 0;
    double alpha = 1.0;
};

/// Random (k, it) expansion used for shape-guided training; it is reduced until alpha >= min_alpha.
MaskPair random_expansion(const Mask& segmentation, Rng& rng, double min_alpha = 0.05);

}  // namespace taskfill
