#include "tere/scenegen.hpp"

#include <algorithm>
#include <cmath>

#include "tere/font5x7.hpp"
#include "tere/rng.hpp"

namespace tere {

std::vector<Point> box_boundary_points(double x0, double y0, double x1, double y1, int n) {
    if (n < 4) throw InvalidArgument("box_boundary_points: n < 4");
    const Point corners[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    const int base = n / 4, extra = n % 4;
    std::vector<Point> pts;
    pts.reserve(n);
    for (int e = 0; e < 4; ++e) {
        const int k = base + (e < extra ? 1 : 0);
        const Point& a = corners[e];
        const Point& b = corners[(e + 1) % 4];
        for (int i = 0; i < k; ++i) {
            const double t = static_cast<double>(i) / k;
            pts.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return pts;
}

namespace {

struct PlacedWord {
    std::string text;
    double cx, cy;        // center, pixel coords
    double w, h;          // unrotated glyph-box size, pixels
    double angle;         // radians
    double scale;
    double color[3];
    // rotated AABB for overlap tests
    double ax0, ay0, ax1, ay1;
};

void rotated_aabb(const PlacedWord& pw, double* x0, double* y0, double* x1, double* y1) {
    const double c = std::cos(pw.angle), s = std::sin(pw.angle);
    const double hx = pw.w / 2, hy = pw.h / 2;
    const double ex = std::abs(c) * hx + std::abs(s) * hy;
    const double ey = std::abs(s) * hx + std::abs(c) * hy;
    *x0 = pw.cx - ex;
    *y0 = pw.cy - ey;
    *x1 = pw.cx + ex;
    *y1 = pw.cy + ey;
}

bool overlaps(const PlacedWord& a, const PlacedWord& b, double pad) {
    return !(a.ax1 + pad < b.ax0 || b.ax1 + pad < a.ax0 || a.ay1 + pad < b.ay0 || b.ay1 + pad < a.ay0);
}

double luma(const double c[3]) { return 0.299 * c[0] + 0.587 * c[1] + 0.114 * c[2]; }

void paint_background(ImageBuffer& img, const std::string& mode, Rng& rng, double bg_color[3]) {
    const int h = img.height(), w = img.width();
    for (int c = 0; c < 3; ++c) bg_color[c] = rng.uniform(0.12, 0.95);
    std::string m = mode;
    if (m == "any") {
        const double u = rng.uniform();
        m = u < 0.34 ? "flat" : (u < 0.67 ? "gradient" : "noise");
    }
    if (m == "flat") {
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                for (int c = 0; c < 3; ++c) img.at(y, x, c) = bg_color[c];
    } else if (m == "gradient") {
        double c2[3];
        for (int c = 0; c < 3; ++c) c2[c] = std::clamp(bg_color[c] + rng.uniform(-0.3, 0.3), 0.05, 1.0);
        const double ang = rng.uniform(0, 2 * M_PI);
        const double dx = std::cos(ang), dy = std::sin(ang);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                double t = ((x * dx + y * dy) / (w * std::abs(dx) + h * std::abs(dy) + 1e-9) + 1.0) / 2.0;
                t = std::clamp(t, 0.0, 1.0);
                for (int c = 0; c < 3; ++c) img.at(y, x, c) = bg_color[c] * (1 - t) + c2[c] * t;
            }
        for (int c = 0; c < 3; ++c) bg_color[c] = 0.5 * (bg_color[c] + c2[c]);
    } else {  // noise texture: smoothed low-amplitude speckle over the base color
        ImageBuffer speckle(h, w);
        for (double& v : speckle.data()) v = rng.uniform(-1.0, 1.0);
        speckle = gaussian_blur(speckle, 2.0);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                for (int c = 0; c < 3; ++c)
                    img.at(y, x, c) = std::clamp(bg_color[c] + 0.35 * speckle.at(y, x, c), 0.0, 1.0);
    }
}

// Ink coverage of the word bitmap at local pixel coords (nearest-neighbor
// scaled); word layout is glyph cells of 5s x 7s with 1s spacing.
bool word_ink(const std::string& text, double scale, double lx, double ly) {
    const double glyph_w = kFontCols * scale;
    const double advance = glyph_w + scale;
    const int gi = static_cast<int>(std::floor(lx / advance));
    if (gi < 0 || gi >= static_cast<int>(text.size())) return false;
    const double gx = lx - gi * advance;
    if (gx >= glyph_w) return false;  // inter-glyph spacing
    const int col = std::min(kFontCols - 1, static_cast<int>(gx / scale));
    const int row = std::min(kFontRows - 1, static_cast<int>(ly / scale));
    if (row < 0 || col < 0) return false;
    const std::uint8_t* g = font5x7_glyph(text[gi]);
    if (!g) return false;
    return (g[row] >> (kFontCols - 1 - col)) & 1;
}

}  // namespace

Scene render_scene(const SceneSpec& spec) {
    if (spec.words_min < 1 || spec.words_max < spec.words_min)
        throw InvalidArgument("render_scene: bad word count range");
    for (char c : spec.charset)
        if (!font5x7_has(c)) throw InvalidArgument(std::string("render_scene: unsupported charset char ") + c);

    Rng rng(spec.seed);
    Scene scene;
    scene.image = ImageBuffer(spec.height, spec.width);
    double bg[3];
    paint_background(scene.image, spec.background, rng, bg);

    const int n_words = static_cast<int>(rng.uniform_int(spec.words_min, spec.words_max));
    std::vector<PlacedWord> placed;
    for (int wi = 0; wi < n_words; ++wi) {
        const int len = static_cast<int>(rng.uniform_int(spec.word_len_min, spec.word_len_max));
        std::string text;
        for (int i = 0; i < len; ++i)
            text += spec.charset[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(spec.charset.size()) - 1))];

        bool ok = false;
        for (int attempt = 0; attempt < spec.max_place_attempts && !ok; ++attempt) {
            // late attempts retreat to the smallest font so dense scenes still place
            const bool desperate = attempt >= spec.max_place_attempts / 2;
            PlacedWord pw;
            pw.text = text;
            pw.scale = desperate ? spec.font_scale_min
                                 : rng.uniform(spec.font_scale_min, spec.font_scale_max);
            pw.w = len * kFontCols * pw.scale + (len - 1) * pw.scale;
            pw.h = kFontRows * pw.scale;
            pw.angle = rng.uniform(-spec.rotation_max_deg, spec.rotation_max_deg) * M_PI / 180.0;
            rotated_aabb(pw, &pw.ax0, &pw.ay0, &pw.ax1, &pw.ay1);
            const double ex = (pw.ax1 - pw.ax0) / 2, ey = (pw.ay1 - pw.ay0) / 2;
            if (2 * ex > spec.width - 4 || 2 * ey > spec.height - 4) continue;  // cannot fit at this scale
            pw.cx = rng.uniform(ex + 2, spec.width - ex - 2);
            pw.cy = rng.uniform(ey + 2, spec.height - ey - 2);
            rotated_aabb(pw, &pw.ax0, &pw.ay0, &pw.ax1, &pw.ay1);

            bool clash = false;
            for (const PlacedWord& other : placed)
                if (overlaps(pw, other, 2.0)) clash = true;
            if (clash) continue;

            // contrasting ink color against the local background
            double bgl = 0.0;
            int cnt = 0;
            for (int y = std::max(0, static_cast<int>(pw.ay0)); y < std::min(spec.height, static_cast<int>(pw.ay1) + 1); ++y)
                for (int x = std::max(0, static_cast<int>(pw.ax0)); x < std::min(spec.width, static_cast<int>(pw.ax1) + 1); ++x) {
                    const double px[3] = {scene.image.at(y, x, 0), scene.image.at(y, x, 1), scene.image.at(y, x, 2)};
                    bgl += luma(px);
                    ++cnt;
                }
            bgl = cnt > 0 ? bgl / cnt : 0.5;
            for (int tries = 0; tries < 50; ++tries) {
                for (int c = 0; c < 3; ++c) pw.color[c] = rng.uniform(0.0, 1.0);
                if (std::abs(luma(pw.color) - bgl) >= 0.35) break;
            }
            placed.push_back(pw);
            ok = true;
        }
        if (!ok) {
            // deterministic grid scan at minimum scale, axis-aligned
            PlacedWord pw;
            pw.text = text;
            pw.scale = spec.font_scale_min;
            pw.w = len * kFontCols * pw.scale + (len - 1) * pw.scale;
            pw.h = kFontRows * pw.scale;
            pw.angle = 0.0;
            const double ex = pw.w / 2, ey = pw.h / 2;
            for (int gy = 0; gy < 16 && !ok; ++gy)
                for (int gx = 0; gx < 16 && !ok; ++gx) {
                    pw.cx = ex + 2 + (spec.width - 2 * ex - 4) * gx / 15.0;
                    pw.cy = ey + 2 + (spec.height - 2 * ey - 4) * gy / 15.0;
                    if (pw.cx < ex + 2 || pw.cx > spec.width - ex - 2) continue;
                    if (pw.cy < ey + 2 || pw.cy > spec.height - ey - 2) continue;
                    rotated_aabb(pw, &pw.ax0, &pw.ay0, &pw.ax1, &pw.ay1);
                    bool clash = false;
                    for (const PlacedWord& other : placed)
                        if (overlaps(pw, other, 2.0)) clash = true;
                    if (clash) continue;
                    for (int c = 0; c < 3; ++c) pw.color[c] = rng.uniform(0.0, 1.0);
                    if (std::abs(luma(pw.color) - luma(bg)) < 0.35)
                        for (int c = 0; c < 3; ++c) pw.color[c] = luma(bg) > 0.5 ? 0.05 : 0.95;
                    placed.push_back(pw);
                    ok = true;
                }
        }
        if (!ok) throw Error("render_scene: scene too crowded");
    }

    // composite words back-to-front with a smoothed ink mask
    for (const PlacedWord& pw : placed) {
        const double c = std::cos(-pw.angle), s = std::sin(-pw.angle);
        const int x0 = std::max(0, static_cast<int>(std::floor(pw.ax0)) - 2);
        const int y0 = std::max(0, static_cast<int>(std::floor(pw.ay0)) - 2);
        const int x1 = std::min(spec.width - 1, static_cast<int>(std::ceil(pw.ax1)) + 2);
        const int y1 = std::min(spec.height - 1, static_cast<int>(std::ceil(pw.ay1)) + 2);
        const int bw = x1 - x0 + 1, bh = y1 - y0 + 1;
        if (bw <= 0 || bh <= 0) continue;

        ImageBuffer mask(bh, bw);
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) {
                const double rx = x + 0.5 - pw.cx, ry = y + 0.5 - pw.cy;
                const double lx = rx * c - ry * s + pw.w / 2;
                const double ly = rx * s + ry * c + pw.h / 2;
                if (word_ink(pw.text, pw.scale, lx, ly)) {
                    mask.at(y - y0, x - x0, 0) = 1.0;
                    mask.at(y - y0, x - x0, 1) = 1.0;
                    mask.at(y - y0, x - x0, 2) = 1.0;
                }
            }
        if (spec.smooth) mask = gaussian_blur(mask, 0.45);
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) {
                const double a = std::clamp(mask.at(y - y0, x - x0, 0), 0.0, 1.0);
                if (a <= 0.0) continue;
                for (int ch = 0; ch < 3; ++ch)
                    scene.image.at(y, x, ch) = (1 - a) * scene.image.at(y, x, ch) + a * pw.color[ch];
            }
    }

    // ground-truth polygons: glyph-box boundary resampled, rotated, normalized
    for (const PlacedWord& pw : placed) {
        std::vector<Point> local = box_boundary_points(0, 0, pw.w, pw.h, spec.polygon_points);
        const double c = std::cos(pw.angle), s = std::sin(pw.angle);
        std::vector<Point> pts;
        pts.reserve(local.size());
        for (const Point& p : local) {
            const double rx = p.x - pw.w / 2, ry = p.y - pw.h / 2;
            const double gx = pw.cx + rx * c - ry * s;
            const double gy = pw.cy + rx * s + ry * c;
            pts.push_back({gx / spec.width, gy / spec.height});
        }
        TextInstance inst;
        inst.polygon = Polygon(pts);
        inst.text = pw.text;
        inst.confidence = 1.0;
        scene.instances.push_back(inst);
    }
    return scene;
}

}  // namespace tere
