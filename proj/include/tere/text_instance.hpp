#pragma once

#include <string>

#include "tere/geometry.hpp"

namespace tere {

// One text instance: polygon control points plus its transcription. Ground
// truths carry confidence 1; predictions carry the spotting confidence.
struct TextInstance {
    Polygon polygon;
    std::string text;
    double confidence = 1.0;
};

}  // namespace tere
