#include "tere/degrade.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "tere/rng.hpp"

namespace tere {

namespace {

// Standard JPEG luminance quantization table, applied to all three channels.
constexpr int kQuantBase[64] = {
    16, 11, 10, 16, 24,  40,  51,  61,
    12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,
    14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,
    24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101,
    72, 92, 95, 98, 112, 100, 103, 99};

void quant_table(double quality, double out[64]) {
    quality = std::clamp(quality, 1.0, 99.0);
    const double s = quality < 50.0 ? 5000.0 / quality : 200.0 - 2.0 * quality;
    for (int i = 0; i < 64; ++i)
        out[i] = std::max(1.0, std::floor((kQuantBase[i] * s + 50.0) / 100.0));
}

// Orthonormal DCT-II basis for N=8.
struct Dct8 {
    double c[8][8];
    Dct8() {
        for (int k = 0; k < 8; ++k) {
            const double a = k == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
            for (int n = 0; n < 8; ++n)
                c[k][n] = a * std::cos(M_PI * (n + 0.5) * k / 8.0);
        }
    }
};

const Dct8& dct8() {
    static const Dct8 d;
    return d;
}

}  // namespace

ImageBuffer dct_compress(const ImageBuffer& img, double quality) {
    if (quality >= 100.0) return img;
    double qt[64];
    quant_table(quality, qt);
    const Dct8& d = dct8();
    const int h = img.height(), w = img.width();
    ImageBuffer out(h, w);

    double block[8][8], tmp[8][8], coef[8][8];
    for (int c = 0; c < 3; ++c) {
        for (int by = 0; by < h; by += 8) {
            for (int bx = 0; bx < w; bx += 8) {
                for (int y = 0; y < 8; ++y)
                    for (int x = 0; x < 8; ++x) {
                        const int sy = std::min(by + y, h - 1);
                        const int sx = std::min(bx + x, w - 1);
                        block[y][x] = img.at(sy, sx, c) * 255.0 - 128.0;
                    }
                // rows then columns
                for (int y = 0; y < 8; ++y)
                    for (int k = 0; k < 8; ++k) {
                        double s = 0;
                        for (int n = 0; n < 8; ++n) s += d.c[k][n] * block[y][n];
                        tmp[y][k] = s;
                    }
                for (int x = 0; x < 8; ++x)
                    for (int k = 0; k < 8; ++k) {
                        double s = 0;
                        for (int n = 0; n < 8; ++n) s += d.c[k][n] * tmp[n][x];
                        coef[k][x] = s;
                    }
                for (int y = 0; y < 8; ++y)
                    for (int x = 0; x < 8; ++x) {
                        const double q = qt[y * 8 + x];
                        coef[y][x] = std::round(coef[y][x] / q) * q;
                    }
                // inverse: columns then rows
                for (int x = 0; x < 8; ++x)
                    for (int n = 0; n < 8; ++n) {
                        double s = 0;
                        for (int k = 0; k < 8; ++k) s += d.c[k][n] * coef[k][x];
                        tmp[n][x] = s;
                    }
                for (int y = 0; y < 8; ++y)
                    for (int n = 0; n < 8; ++n) {
                        double s = 0;
                        for (int k = 0; k < 8; ++k) s += d.c[k][n] * tmp[y][k];
                        block[y][n] = s;
                    }
                for (int y = 0; y < 8 && by + y < h; ++y)
                    for (int x = 0; x < 8 && bx + x < w; ++x)
                        out.at(by + y, bx + x, c) = std::clamp((block[y][x] + 128.0) / 255.0, 0.0, 1.0);
            }
        }
    }
    return out;
}

DegradationRecipe make_recipe(int level, std::uint64_t seed, const DegradeConfig& config) {
    if (level < 1 || level > 3) throw InvalidArgument("make_recipe: level must be in {1,2,3}");
    const DegradeLevelParams& p = config.levels[level - 1];
    Rng rng(Rng::derive_seed(seed, static_cast<std::uint64_t>(level)));

    DegradationRecipe r;
    r.level = level;
    r.seed = seed;
    DegradationStage blur{"blur", rng.uniform(p.blur_sigma_min, p.blur_sigma_max), 1.0, "bilinear", 0.0, 100.0};
    DegradationStage resize{"resize", 0.0, rng.uniform(p.scale_min, p.scale_max),
                            rng.uniform() < 0.5 ? "bilinear" : "area", 0.0, 100.0};
    DegradationStage noise{"noise", 0.0, 1.0, "bilinear", rng.uniform(p.noise_sigma_min, p.noise_sigma_max), 100.0};
    DegradationStage compress{"compress", 0.0, 1.0, "bilinear", 0.0, rng.uniform(p.quality_min, p.quality_max)};
    r.stages = {blur, resize, noise, compress};
    return r;
}

ImageBuffer degrade(const ImageBuffer& img, const DegradationRecipe& recipe) {
    ImageBuffer cur = img;
    const int h0 = img.height(), w0 = img.width();
    Rng rng(Rng::derive_seed(recipe.seed, 0x6e6f697365ull));  // noise stream

    for (const DegradationStage& st : recipe.stages) {
        if (st.kind == "blur") {
            if (st.blur_sigma > 0.0) cur = gaussian_blur(cur, st.blur_sigma);
        } else if (st.kind == "resize") {
            if (st.scale != 1.0) {
                const int nh = std::max(8, static_cast<int>(std::lround(h0 * st.scale)));
                const int nw = std::max(8, static_cast<int>(std::lround(w0 * st.scale)));
                cur = resize(cur, nh, nw, resample_mode_from_name(st.resample));
            }
        } else if (st.kind == "noise") {
            if (st.noise_sigma > 0.0) {
                for (double& v : cur.data()) v += st.noise_sigma * rng.normal();
                cur.clamp01();
            }
        } else if (st.kind == "compress") {
            cur = dct_compress(cur, st.quality);
        } else {
            throw InvalidArgument("degrade: unknown stage kind " + st.kind);
        }
    }
    if (cur.height() != h0 || cur.width() != w0)
        cur = resize(cur, h0, w0, ResampleMode::kBilinear);
    cur.clamp01();
    return cur;
}

std::string DegradationRecipe::to_json() const {
    nlohmann::ordered_json j;
    j["level"] = level;
    j["seed"] = seed;
    nlohmann::ordered_json stages_j = nlohmann::ordered_json::array();
    for (const DegradationStage& st : stages) {
        nlohmann::ordered_json s;
        s["kind"] = st.kind;
        if (st.kind == "blur") s["sigma"] = st.blur_sigma;
        if (st.kind == "resize") {
            s["scale"] = st.scale;
            s["mode"] = st.resample;
        }
        if (st.kind == "noise") s["sigma"] = st.noise_sigma;
        if (st.kind == "compress") s["quality"] = st.quality;
        stages_j.push_back(s);
    }
    j["stages"] = stages_j;
    return j.dump();
}

DegradationRecipe DegradationRecipe::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    DegradationRecipe r;
    r.level = j.at("level").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& s : j.at("stages")) {
        DegradationStage st;
        st.kind = s.at("kind").get<std::string>();
        if (st.kind == "blur") st.blur_sigma = s.at("sigma").get<double>();
        if (st.kind == "resize") {
            st.scale = s.at("scale").get<double>();
            st.resample = s.at("mode").get<std::string>();
        }
        if (st.kind == "noise") st.noise_sigma = s.at("sigma").get<double>();
        if (st.kind == "compress") st.quality = s.at("quality").get<double>();
        r.stages.push_back(st);
    }
    return r;
}

}  // namespace tere
