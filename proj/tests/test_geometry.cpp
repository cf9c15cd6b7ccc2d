#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "tere/geometry.hpp"
#include "tere/rng.hpp"

using namespace tere;

namespace {

Polygon make_poly(std::initializer_list<std::pair<double, double>> pts) {
    std::vector<Point> v;
    for (auto& [x, y] : pts) v.push_back({x, y});
    return Polygon(v);
}

// Test-side oracle: winding-rule rasterization with its own inside test,
// independent of the library's even-odd implementation.
bool oracle_inside(const std::vector<Point>& poly, double px, double py) {
    int crossings = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if ((a.y <= py && b.y > py) || (b.y <= py && a.y > py)) {
            const double t = (py - a.y) / (b.y - a.y);
            if (px < a.x + t * (b.x - a.x)) ++crossings;
        }
    }
    return (crossings % 2) == 1;
}

double oracle_raster_iou(const Polygon& a, const Polygon& b, int res) {
    Box ba = polygon_to_box(a), bb = polygon_to_box(b);
    const double x0 = std::min(ba.x_min, bb.x_min), x1 = std::max(ba.x_max, bb.x_max);
    const double y0 = std::min(ba.y_min, bb.y_min), y1 = std::max(ba.y_max, bb.y_max);
    long inter = 0, uni = 0;
    for (int iy = 0; iy < res; ++iy) {
        const double y = y0 + (y1 - y0) * (iy + 0.5) / res;
        for (int ix = 0; ix < res; ++ix) {
            const double x = x0 + (x1 - x0) * (ix + 0.5) / res;
            const bool ia = oracle_inside(a.points, x, y);
            const bool ib = oracle_inside(b.points, x, y);
            inter += (ia && ib);
            uni += (ia || ib);
        }
    }
    return uni == 0 ? 0.0 : static_cast<double>(inter) / uni;
}

double oracle_mc_giou(const Box& a, const Box& b, Rng& rng, int samples) {
    const Box hull(std::min(a.x_min, b.x_min), std::min(a.y_min, b.y_min),
                   std::max(a.x_max, b.x_max), std::max(a.y_max, b.y_max));
    long in_a = 0, in_b = 0, in_both = 0;
    for (int i = 0; i < samples; ++i) {
        const double x = rng.uniform(hull.x_min, hull.x_max);
        const double y = rng.uniform(hull.y_min, hull.y_max);
        const bool ia = x >= a.x_min && x <= a.x_max && y >= a.y_min && y <= a.y_max;
        const bool ib = x >= b.x_min && x <= b.x_max && y >= b.y_min && y <= b.y_max;
        in_a += ia;
        in_b += ib;
        in_both += (ia && ib);
    }
    const double ha = hull.area();
    const double area_a = ha * in_a / samples;
    const double area_b = ha * in_b / samples;
    const double inter = ha * in_both / samples;
    const double uni = area_a + area_b - inter;
    const double iou = uni > 0 ? inter / uni : 0.0;
    return iou - (ha - uni) / ha;
}

Box random_box(Rng& rng) {
    const double x0 = rng.uniform(0.0, 0.8);
    const double y0 = rng.uniform(0.0, 0.8);
    return Box(x0, y0, x0 + rng.uniform(0.05, 0.9), y0 + rng.uniform(0.05, 0.9));
}

// Random convex quad: four angular-sorted points on a jittered ellipse.
Polygon random_convex_quad(Rng& rng) {
    const double cx = rng.uniform(0.3, 0.7), cy = rng.uniform(0.3, 0.7);
    const double rx = rng.uniform(0.1, 0.3), ry = rng.uniform(0.1, 0.3);
    std::vector<double> angles;
    for (int i = 0; i < 4; ++i) angles.push_back(rng.uniform(0, 2 * M_PI));
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    for (double a : angles) pts.push_back({cx + rx * std::cos(a), cy + ry * std::sin(a)});
    Polygon p(pts);
    if (!p.is_convex() || polygon_area(p) < 1e-3) return random_convex_quad(rng);
    return p;
}

}  // namespace

TEST_CASE("polygon_area basics") {
    CHECK(polygon_area(make_poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == doctest::Approx(1.0));
    CHECK(polygon_area(make_poly({{0, 1}, {1, 1}, {1, 0}, {0, 0}})) == doctest::Approx(1.0));
    CHECK(polygon_area(make_poly({{0, 0}, {1, 0}, {0, 1}})) == doctest::Approx(0.5));
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}}), InvalidGeometry);
}

TEST_CASE("polygon_to_box") {
    Box b = polygon_to_box(make_poly({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(b.x_min == 0.0);
    CHECK(b.y_min == 0.0);
    CHECK(b.x_max == 1.0);
    CHECK(b.y_max == 1.0);

    const double eps = 1e-4;
    Box c = polygon_to_box(make_poly({{0.5 - eps, 0.5}, {0.5 + eps, 0.5}, {0.5, 0.5 + eps}}));
    CHECK(c.x_min == doctest::Approx(0.5 - eps));
    CHECK(c.x_max == doctest::Approx(0.5 + eps));
    CHECK(c.y_max == doctest::Approx(0.5 + eps));

    // random 16-gons vs an independent coordinate scan
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 16; ++i) pts.push_back({rng.uniform(), rng.uniform()});
        Polygon p(pts);
        double x0 = 1e9, y0 = 1e9, x1 = -1e9, y1 = -1e9;
        for (const Point& q : pts) {
            x0 = std::min(x0, q.x);
            y0 = std::min(y0, q.y);
            x1 = std::max(x1, q.x);
            y1 = std::max(y1, q.y);
        }
        Box b2 = polygon_to_box(p);
        CHECK(b2.x_min == x0);
        CHECK(b2.y_min == y0);
        CHECK(b2.x_max == x1);
        CHECK(b2.y_max == y1);
    }
}

TEST_CASE("box_iou basics") {
    Box a(0, 0, 1, 1);
    CHECK(box_iou(a, a) == doctest::Approx(1.0));
    CHECK(box_iou(a, Box(2, 2, 3, 3)) == doctest::Approx(0.0));
    CHECK(box_iou(a, Box(0.5, 0, 1.5, 1)) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("generalized_box_iou basics") {
    Box a(0, 0, 1, 1);
    CHECK(generalized_box_iou(a, a).value == doctest::Approx(1.0));
    CHECK(generalized_box_iou(a, Box(2, 0, 3, 1)).value == doctest::Approx(-1.0 / 3.0));

    Box degenerate(0.5, 0.5, 0.5, 0.5);
    auto g = generalized_box_iou(degenerate, degenerate);
    CHECK(g.degenerate_hull);
    CHECK(g.value == 0.0);
}

TEST_CASE("generalized_box_iou vs Monte-Carlo oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Box a = random_box(rng);
        Box b = random_box(rng);
        const double mc = oracle_mc_giou(a, b, rng, 400000);
        CHECK(std::abs(generalized_box_iou(a, b).value - mc) <= 1e-2);
    }
}

TEST_CASE("polygon_iou basics and raster fallback") {
    Polygon sq = make_poly({{0.2, 0.2}, {0.6, 0.2}, {0.6, 0.6}, {0.2, 0.6}});
    CHECK(polygon_iou(sq, sq).value == doctest::Approx(1.0));

    Polygon far = make_poly({{0.7, 0.7}, {0.9, 0.7}, {0.9, 0.9}, {0.7, 0.9}});
    CHECK(polygon_iou(sq, far).value == doctest::Approx(0.0));

    // self-intersecting bowtie takes the raster path and is flagged
    Polygon bow = make_poly({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    auto r = polygon_iou(bow, sq, 256);
    CHECK(r.self_intersecting);
    CHECK(r.rasterized);
}

TEST_CASE("polygon_iou convex path vs supersampled rasterization oracle") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Polygon a = random_convex_quad(rng);
        Polygon b = random_convex_quad(rng);
        auto r = polygon_iou(a, b);
        CHECK_FALSE(r.rasterized);
        const double oracle = oracle_raster_iou(a, b, 1024);
        CHECK(std::abs(r.value - oracle) <= 2e-2);
    }
}

TEST_CASE("iou invariants") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Box a = random_box(rng);
        Box b = random_box(rng);
        const double iou = box_iou(a, b);
        CHECK(iou == box_iou(b, a));
        CHECK(iou >= 0.0);
        CHECK(iou <= 1.0);
        const double g = generalized_box_iou(a, b).value;
        CHECK(g == doctest::Approx(generalized_box_iou(b, a).value).epsilon(1e-15));
        CHECK(g > -1.0);
        CHECK(g <= 1.0);
        CHECK(g <= iou + 1e-12);

        // translation invariance
        const double dx = rng.uniform(-0.1, 0.1), dy = rng.uniform(-0.1, 0.1);
        Box a2(a.x_min + dx, a.y_min + dy, a.x_max + dx, a.y_max + dy);
        Box b2(b.x_min + dx, b.y_min + dy, b.x_max + dx, b.y_max + dy);
        CHECK(box_iou(a2, b2) == doctest::Approx(iou).epsilon(1e-12));
        CHECK(generalized_box_iou(a2, b2).value == doctest::Approx(g).epsilon(1e-12));
    }
}

TEST_CASE("polygon_iou on axis-aligned rectangles equals box_iou") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        Box a = random_box(rng);
        Box b = random_box(rng);
        Polygon pa = make_poly({{a.x_min, a.y_min}, {a.x_max, a.y_min}, {a.x_max, a.y_max}, {a.x_min, a.y_max}});
        Polygon pb = make_poly({{b.x_min, b.y_min}, {b.x_max, b.y_min}, {b.x_max, b.y_max}, {b.x_min, b.y_max}});
        auto r = polygon_iou(pa, pb);
        CHECK_FALSE(r.rasterized);
        CHECK(r.value == doctest::Approx(box_iou(a, b)).epsilon(1e-9));
    }
}

TEST_CASE("gIoU equals IoU for identical boxes") {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        Box a = random_box(rng);
        CHECK(generalized_box_iou(a, a).value == doctest::Approx(box_iou(a, a)));
    }
}
