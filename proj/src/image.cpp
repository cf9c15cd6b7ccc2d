#include "tere/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace tere {

void ImageBuffer::clamp01() {
    for (double& v : data_) v = std::clamp(v, 0.0, 1.0);
}

double ImageBuffer::mean() const {
    double s = 0.0;
    for (double v : data_) s += v;
    return data_.empty() ? 0.0 : s / static_cast<double>(data_.size());
}

void write_ppm(const ImageBuffer& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_ppm: cannot open " + path);
    out << "P6\n" << img.width() << " " << img.height() << "\n255\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(img.width()) * 3);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            for (int c = 0; c < 3; ++c) {
                const double v = std::clamp(img.at(y, x, c), 0.0, 1.0);
                row[static_cast<std::size_t>(x) * 3 + c] =
                    static_cast<unsigned char>(std::lround(v * 255.0));
            }
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw IoError("write_ppm: write failed for " + path);
}

ImageBuffer read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_ppm: cannot open " + path);
    std::string magic;
    in >> magic;
    if (magic != "P6") throw IoError("read_ppm: not a P6 file: " + path);
    auto next_int = [&in, &path]() {
        // skips whitespace and '#' comments
        int c = in.get();
        while (c != EOF && (std::isspace(c) || c == '#')) {
            if (c == '#') {
                while (c != EOF && c != '\n') c = in.get();
            }
            c = in.get();
        }
        if (c == EOF) throw IoError("read_ppm: truncated header in " + path);
        int v = 0;
        while (c != EOF && std::isdigit(c)) {
            v = v * 10 + (c - '0');
            c = in.get();
        }
        in.unget();
        return v;
    };
    const int w = next_int();
    const int h = next_int();
    const int maxval = next_int();
    if (maxval != 255) throw IoError("read_ppm: unsupported maxval in " + path);
    in.get();  // single whitespace after header
    ImageBuffer img(h, w);
    std::vector<unsigned char> row(static_cast<std::size_t>(w) * 3);
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size()));
        if (!in) throw IoError("read_ppm: truncated pixel data in " + path);
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < 3; ++c)
                img.at(y, x, c) = static_cast<double>(row[static_cast<std::size_t>(x) * 3 + c]) / 255.0;
    }
    return img;
}

ImageBuffer to_grayscale3(const ImageBuffer& img) {
    ImageBuffer out(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            const double g = 0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) + 0.114 * img.at(y, x, 2);
            for (int c = 0; c < 3; ++c) out.at(y, x, c) = g;
        }
    return out;
}

const char* resample_mode_name(ResampleMode m) {
    switch (m) {
        case ResampleMode::kNearest: return "nearest";
        case ResampleMode::kBilinear: return "bilinear";
        case ResampleMode::kArea: return "area";
    }
    return "bilinear";
}

ResampleMode resample_mode_from_name(const std::string& name) {
    if (name == "nearest") return ResampleMode::kNearest;
    if (name == "bilinear") return ResampleMode::kBilinear;
    if (name == "area") return ResampleMode::kArea;
    throw InvalidArgument("unknown resample mode: " + name);
}

namespace {

inline int reflect(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - i - 1;
    }
    return i;
}

ImageBuffer resize_nearest(const ImageBuffer& img, int oh, int ow) {
    ImageBuffer out(oh, ow);
    for (int y = 0; y < oh; ++y) {
        const int sy = std::min(img.height() - 1,
                                static_cast<int>((y + 0.5) * img.height() / oh));
        for (int x = 0; x < ow; ++x) {
            const int sx = std::min(img.width() - 1,
                                    static_cast<int>((x + 0.5) * img.width() / ow));
            for (int c = 0; c < 3; ++c) out.at(y, x, c) = img.at(sy, sx, c);
        }
    }
    return out;
}

ImageBuffer resize_bilinear(const ImageBuffer& img, int oh, int ow) {
    ImageBuffer out(oh, ow);
    const double sy = static_cast<double>(img.height()) / oh;
    const double sx = static_cast<double>(img.width()) / ow;
    for (int y = 0; y < oh; ++y) {
        const double fy = (y + 0.5) * sy - 0.5;
        const int y0 = static_cast<int>(std::floor(fy));
        const double wy = fy - y0;
        const int ya = std::clamp(y0, 0, img.height() - 1);
        const int yb = std::clamp(y0 + 1, 0, img.height() - 1);
        for (int x = 0; x < ow; ++x) {
            const double fx = (x + 0.5) * sx - 0.5;
            const int x0 = static_cast<int>(std::floor(fx));
            const double wx = fx - x0;
            const int xa = std::clamp(x0, 0, img.width() - 1);
            const int xb = std::clamp(x0 + 1, 0, img.width() - 1);
            for (int c = 0; c < 3; ++c) {
                const double top = img.at(ya, xa, c) * (1 - wx) + img.at(ya, xb, c) * wx;
                const double bot = img.at(yb, xa, c) * (1 - wx) + img.at(yb, xb, c) * wx;
                out.at(y, x, c) = top * (1 - wy) + bot * wy;
            }
        }
    }
    return out;
}

// Box-average over the source footprint of each output pixel.
ImageBuffer resize_area(const ImageBuffer& img, int oh, int ow) {
    ImageBuffer out(oh, ow);
    const double sy = static_cast<double>(img.height()) / oh;
    const double sx = static_cast<double>(img.width()) / ow;
    for (int y = 0; y < oh; ++y) {
        const double y0 = y * sy, y1 = (y + 1) * sy;
        for (int x = 0; x < ow; ++x) {
            const double x0 = x * sx, x1 = (x + 1) * sx;
            double acc[3] = {0, 0, 0};
            double area = 0.0;
            for (int yy = static_cast<int>(std::floor(y0)); yy < static_cast<int>(std::ceil(y1)); ++yy) {
                const double hy = std::min<double>(y1, yy + 1) - std::max<double>(y0, yy);
                if (hy <= 0) continue;
                for (int xx = static_cast<int>(std::floor(x0)); xx < static_cast<int>(std::ceil(x1)); ++xx) {
                    const double hx = std::min<double>(x1, xx + 1) - std::max<double>(x0, xx);
                    if (hx <= 0) continue;
                    const double w = hy * hx;
                    const int cy = std::clamp(yy, 0, img.height() - 1);
                    const int cx = std::clamp(xx, 0, img.width() - 1);
                    for (int c = 0; c < 3; ++c) acc[c] += w * img.at(cy, cx, c);
                    area += w;
                }
            }
            for (int c = 0; c < 3; ++c) out.at(y, x, c) = acc[c] / area;
        }
    }
    return out;
}

}  // namespace

ImageBuffer resize(const ImageBuffer& img, int out_h, int out_w, ResampleMode mode) {
    if (out_h <= 0 || out_w <= 0) throw InvalidArgument("resize: non-positive target size");
    if (out_h == img.height() && out_w == img.width()) return img;
    switch (mode) {
        case ResampleMode::kNearest: return resize_nearest(img, out_h, out_w);
        case ResampleMode::kBilinear: return resize_bilinear(img, out_h, out_w);
        case ResampleMode::kArea: return resize_area(img, out_h, out_w);
    }
    return img;
}

ImageBuffer gaussian_blur(const ImageBuffer& img, double sigma) {
    if (sigma <= 0.0) return img;
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> kernel(2 * radius + 1);
    double ksum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
        ksum += kernel[i + radius];
    }
    for (double& k : kernel) k /= ksum;

    ImageBuffer tmp(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            for (int c = 0; c < 3; ++c) {
                double s = 0.0;
                for (int i = -radius; i <= radius; ++i)
                    s += kernel[i + radius] * img.at(y, reflect(x + i, img.width()), c);
                tmp.at(y, x, c) = s;
            }
    ImageBuffer out(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            for (int c = 0; c < 3; ++c) {
                double s = 0.0;
                for (int i = -radius; i <= radius; ++i)
                    s += kernel[i + radius] * tmp.at(reflect(y + i, img.height()), x, c);
                out.at(y, x, c) = s;
            }
    return out;
}

}  // namespace tere
