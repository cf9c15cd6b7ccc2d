#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "tere/font5x7.hpp"
#include "tere/manifest.hpp"
#include "tere/scenegen.hpp"

using namespace tere;

TEST_CASE("font covers the charset") {
    for (char c : std::string("ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789")) {
        CHECK(font5x7_has(c));
        CHECK(font5x7_glyph(c) != nullptr);
    }
    CHECK_FALSE(font5x7_has('a'));
    CHECK_FALSE(font5x7_has('!'));
}

TEST_CASE("single unrotated word yields its glyph-box boundary polygon") {
    SceneSpec spec;
    spec.height = spec.width = 96;
    spec.words_min = spec.words_max = 1;
    spec.word_len_min = spec.word_len_max = 4;
    spec.rotation_max_deg = 0.0;
    spec.font_scale_min = spec.font_scale_max = 2.0;
    spec.seed = 17;
    Scene scene = render_scene(spec);
    REQUIRE(scene.instances.size() == 1);
    const TextInstance& inst = scene.instances[0];
    CHECK(inst.text.size() == 4);
    REQUIRE(inst.polygon.size() == 16);

    // expected: per-edge resampled boundary of the word box
    const double s = 2.0;
    const double w = 4 * kFontCols * s + 3 * s;
    const double h = kFontRows * s;
    Box b = polygon_to_box(inst.polygon);
    CHECK((b.x_max - b.x_min) * spec.width == doctest::Approx(w).epsilon(1e-9));
    CHECK((b.y_max - b.y_min) * spec.height == doctest::Approx(h).epsilon(1e-9));

    std::vector<Point> expected =
        box_boundary_points(b.x_min * spec.width, b.y_min * spec.height,
                            b.x_max * spec.width, b.y_max * spec.height, 16);
    for (int i = 0; i < 16; ++i) {
        CHECK(inst.polygon.points[i].x * spec.width == doctest::Approx(expected[i].x).epsilon(1e-9));
        CHECK(inst.polygon.points[i].y * spec.height == doctest::Approx(expected[i].y).epsilon(1e-9));
    }
}

TEST_CASE("same seed reproduces the scene exactly") {
    SceneSpec spec;
    spec.seed = 99;
    spec.words_min = 1;
    spec.words_max = 3;
    Scene a = render_scene(spec);
    Scene b = render_scene(spec);
    CHECK(a.image.data() == b.image.data());
    REQUIRE(a.instances.size() == b.instances.size());
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
        CHECK(a.instances[i].text == b.instances[i].text);
        for (int k = 0; k < a.instances[i].polygon.size(); ++k) {
            CHECK(a.instances[i].polygon.points[k].x == b.instances[i].polygon.points[k].x);
            CHECK(a.instances[i].polygon.points[k].y == b.instances[i].polygon.points[k].y);
        }
    }
}

TEST_CASE("validity sweep over 100 scenes") {
    for (int s = 0; s < 100; ++s) {
        SceneSpec spec;  // defaults: 128x128, 1-3 words
        spec.seed = 10000 + s;
        Scene scene = render_scene(spec);
        CHECK(!scene.instances.empty());
        for (const TextInstance& inst : scene.instances) {
            CHECK(!inst.text.empty());
            CHECK(polygon_area(inst.polygon) > 0.0);
            for (const Point& p : inst.polygon.points) {
                CHECK(p.x >= 0.0);
                CHECK(p.x <= 1.0);
                CHECK(p.y >= 0.0);
                CHECK(p.y <= 1.0);
            }
        }
    }
}

TEST_CASE("build_dataset counts, files, and manifest round trip") {
    const auto root = std::filesystem::temp_directory_path() / "tere_ds_test";
    std::filesystem::remove_all(root);

    DatasetBuildConfig cfg;
    cfg.scene.height = cfg.scene.width = 64;
    cfg.scene.words_min = 1;
    cfg.scene.words_max = 2;
    cfg.scene.word_len_min = 2;
    cfg.scene.word_len_max = 4;
    cfg.scene.font_scale_min = 1.5;
    cfg.scene.font_scale_max = 2.0;
    cfg.train_count = 8;
    cfg.test_count = 2;
    cfg.levels = {1};
    cfg.seed = 5;
    cfg.out_dir = root.string();

    auto records = build_dataset(cfg);
    REQUIRE(records.size() == 10);
    int hq_files = 0, lq_files = 0;
    for (const auto& r : records) {
        CHECK(std::filesystem::exists(root / r.hq_path));
        ++hq_files;
        REQUIRE(r.lq.size() == 1);
        CHECK(r.lq[0].level == 1);
        CHECK(std::filesystem::exists(root / r.lq[0].path));
        ++lq_files;
    }
    CHECK(hq_files == 10);
    CHECK(lq_files == 10);

    // reload == re-emit, byte for byte at the record level
    auto loaded = load_manifest((root / "manifest.jsonl").string());
    REQUIRE(loaded.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i)
        CHECK(loaded[i].to_json() == records[i].to_json());

    std::filesystem::remove_all(root);
}

TEST_CASE("per-level record counts match the config") {
    const auto root = std::filesystem::temp_directory_path() / "tere_ds_levels";
    std::filesystem::remove_all(root);

    DatasetBuildConfig cfg;
    cfg.scene.height = cfg.scene.width = 64;
    cfg.scene.words_min = cfg.scene.words_max = 1;
    cfg.scene.font_scale_min = 1.5;
    cfg.scene.font_scale_max = 2.0;
    cfg.train_count = 6;
    cfg.test_count = 2;
    cfg.levels = {1, 2, 3};
    cfg.seed = 8;
    cfg.out_dir = root.string();

    auto records = build_dataset(cfg);
    int train_by_level[3] = {0, 0, 0};
    for (const auto& r : records) {
        if (r.split == "train") {
            REQUIRE(r.lq.size() == 1);
            ++train_by_level[r.lq[0].level - 1];
        } else {
            CHECK(r.lq.size() == 3);  // test records carry every level
        }
    }
    CHECK(train_by_level[0] == 2);
    CHECK(train_by_level[1] == 2);
    CHECK(train_by_level[2] == 2);

    std::filesystem::remove_all(root);
}
