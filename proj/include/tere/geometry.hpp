#pragma once

#include <utility>
#include <vector>

#include "tere/common.hpp"

namespace tere {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Ordered vertex list in normalized [0,1]^2 image coordinates. Vertex order is
// preserved; N >= 3 and finite coordinates are enforced at construction.
struct Polygon {
    std::vector<Point> points;

    Polygon() = default;
    explicit Polygon(std::vector<Point> pts);

    int size() const { return static_cast<int>(points.size()); }
    bool is_convex() const;
    bool is_self_intersecting() const;
};

struct Box {
    double x_min = 0.0, y_min = 0.0, x_max = 0.0, y_max = 0.0;

    Box() = default;
    Box(double x0, double y0, double x1, double y1);

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
};

double polygon_area(const Polygon& p);
Box polygon_to_box(const Polygon& p);

double box_iou(const Box& a, const Box& b);

struct GiouResult {
    double value = 0.0;
    bool degenerate_hull = false;  // zero-area enclosing box; value forced to 0
};

GiouResult generalized_box_iou(const Box& a, const Box& b);

struct PolygonIouResult {
    double value = 0.0;
    bool rasterized = false;        // analytic convex path not applicable
    bool self_intersecting = false; // computed on the even-odd fill
};

// Analytic Sutherland-Hodgman clip when both polygons are convex,
// supersampled rasterization (even-odd rule) otherwise.
PolygonIouResult polygon_iou(const Polygon& a, const Polygon& b, int raster_resolution = 1024);

// Convex-convex intersection area (exposed for tests).
double convex_intersection_area(const Polygon& a, const Polygon& b);

}  // namespace tere
