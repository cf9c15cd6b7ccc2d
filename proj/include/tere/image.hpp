#pragma once

#include <string>
#include <vector>

#include "tere/common.hpp"

namespace tere {

// H x W x 3 raster, values in [0,1], row-major interleaved RGB.
class ImageBuffer {
 public:
    ImageBuffer() = default;
    ImageBuffer(int height, int width, double fill = 0.0)
        : h_(height), w_(width), data_(static_cast<std::size_t>(height) * width * 3, fill) {
        if (height <= 0 || width <= 0) throw InvalidArgument("ImageBuffer: non-positive size");
    }

    int height() const { return h_; }
    int width() const { return w_; }

    double& at(int y, int x, int c) { return data_[(static_cast<std::size_t>(y) * w_ + x) * 3 + c]; }
    double at(int y, int x, int c) const { return data_[(static_cast<std::size_t>(y) * w_ + x) * 3 + c]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    void clamp01();
    double mean() const;

    bool same_shape(const ImageBuffer& o) const { return h_ == o.h_ && w_ == o.w_; }

 private:
    int h_ = 0;
    int w_ = 0;
    std::vector<double> data_;
};

// Lossless 8-bit storage: binary PPM (P6). Quantization round(v*255) happens
// only here, at the file boundary.
void write_ppm(const ImageBuffer& img, const std::string& path);
ImageBuffer read_ppm(const std::string& path);

ImageBuffer to_grayscale3(const ImageBuffer& img);  // luma replicated to 3 channels

enum class ResampleMode { kNearest, kBilinear, kArea };

const char* resample_mode_name(ResampleMode m);
ResampleMode resample_mode_from_name(const std::string& name);

ImageBuffer resize(const ImageBuffer& img, int out_h, int out_w, ResampleMode mode);
ImageBuffer gaussian_blur(const ImageBuffer& img, double sigma);

}  // namespace tere
