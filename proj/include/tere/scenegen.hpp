#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tere/degrade.hpp"
#include "tere/image.hpp"
#include "tere/text_instance.hpp"

namespace tere {

struct SceneSpec {
    int height = 128;
    int width = 128;
    int words_min = 1;
    int words_max = 3;
    int word_len_min = 2;
    int word_len_max = 5;
    std::string charset = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    double font_scale_min = 2.0;
    double font_scale_max = 3.0;
    double rotation_max_deg = 30.0;
    int polygon_points = 16;
    std::string background = "any";  // flat | gradient | noise | any
    bool smooth = true;
    int max_place_attempts = 40;
    std::uint64_t seed = 0;
};

struct Scene {
    ImageBuffer image;
    std::vector<TextInstance> instances;
};

// Deterministic in spec.seed. Throws Error("scene too crowded") when word
// placement cannot be satisfied within max_place_attempts.
Scene render_scene(const SceneSpec& spec);

// Boundary of an axis-aligned box resampled to n points, corners preserved
// (per-edge equal subdivision, walk order TL -> TR -> BR -> BL).
std::vector<Point> box_boundary_points(double x0, double y0, double x1, double y1, int n);

}  // namespace tere
