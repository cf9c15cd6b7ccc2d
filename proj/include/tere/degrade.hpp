#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tere/image.hpp"

namespace tere {

// Per-level sampling ranges for the synthetic degradation chain. These are
// artifact constants (severity testbed), exposed through the config file.
struct DegradeLevelParams {
    double blur_sigma_min = 0.0, blur_sigma_max = 0.0;
    double scale_min = 1.0, scale_max = 1.0;
    double noise_sigma_min = 0.0, noise_sigma_max = 0.0;
    double quality_min = 100.0, quality_max = 100.0;
};

struct DegradeConfig {
    std::array<DegradeLevelParams, 3> levels{{
        {0.5, 1.5, 0.50, 0.90, 0.01, 0.03, 70.0, 95.0},  // level 1
        {1.0, 2.5, 0.35, 0.60, 0.02, 0.06, 45.0, 75.0},  // level 2
        {2.0, 4.0, 0.25, 0.45, 0.05, 0.10, 25.0, 55.0},  // level 3
    }};
};

struct DegradationStage {
    std::string kind;  // blur | resize | noise | compress
    double blur_sigma = 0.0;
    double scale = 1.0;
    std::string resample = "bilinear";
    double noise_sigma = 0.0;
    double quality = 100.0;  // >= 100 means bypass
};

struct DegradationRecipe {
    int level = 1;
    std::uint64_t seed = 0;
    std::vector<DegradationStage> stages;

    std::string to_json() const;
    static DegradationRecipe from_json(const std::string& text);
};

// Deterministic in (level, seed, config); level outside {1,2,3} is rejected.
DegradationRecipe make_recipe(int level, std::uint64_t seed, const DegradeConfig& config = {});

// Fixed chain: blur -> downscale -> noise -> block-DCT compression proxy ->
// upscale back to the input size. Pure function of (img, recipe).
ImageBuffer degrade(const ImageBuffer& img, const DegradationRecipe& recipe);

// 8x8 block-DCT quantization on a [0,1] image; quality >= 100 is a no-op.
ImageBuffer dct_compress(const ImageBuffer& img, double quality);

}  // namespace tere
