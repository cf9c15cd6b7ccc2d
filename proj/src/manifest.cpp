#include "tere/manifest.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "tere/rng.hpp"

namespace fs = std::filesystem;

namespace tere {

namespace {

nlohmann::ordered_json instance_to_json(const TextInstance& inst) {
    nlohmann::ordered_json j;
    auto poly = nlohmann::ordered_json::array();
    for (const Point& p : inst.polygon.points) poly.push_back({p.x, p.y});
    j["polygon"] = poly;
    j["text"] = inst.text;
    j["confidence"] = inst.confidence;
    return j;
}

TextInstance instance_from_json(const nlohmann::json& j) {
    std::vector<Point> pts;
    for (const auto& p : j.at("polygon")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    TextInstance inst;
    inst.polygon = Polygon(pts);
    inst.text = j.at("text").get<std::string>();
    inst.confidence = j.value("confidence", 1.0);
    return inst;
}

}  // namespace

std::string DatasetRecord::to_json() const {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["split"] = split;
    j["height"] = height;
    j["width"] = width;
    j["hq"] = hq_path;
    auto lqs = nlohmann::ordered_json::array();
    for (const LqEntry& e : lq) {
        nlohmann::ordered_json l;
        l["level"] = e.level;
        l["path"] = e.path;
        l["recipe"] = nlohmann::ordered_json::parse(e.recipe.to_json());
        lqs.push_back(l);
    }
    j["lq"] = lqs;
    auto insts = nlohmann::ordered_json::array();
    for (const TextInstance& inst : instances) insts.push_back(instance_to_json(inst));
    j["instances"] = insts;
    j["seed"] = seed;
    return j.dump();
}

DatasetRecord DatasetRecord::from_json(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    DatasetRecord r;
    r.id = j.at("id").get<std::string>();
    r.split = j.at("split").get<std::string>();
    r.height = j.at("height").get<int>();
    r.width = j.at("width").get<int>();
    r.hq_path = j.at("hq").get<std::string>();
    for (const auto& l : j.at("lq")) {
        LqEntry e;
        e.level = l.at("level").get<int>();
        e.path = l.at("path").get<std::string>();
        e.recipe = DegradationRecipe::from_json(l.at("recipe").dump());
        r.lq.push_back(e);
    }
    for (const auto& inst : j.at("instances")) r.instances.push_back(instance_from_json(inst));
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

void save_manifest(const std::vector<DatasetRecord>& records, const std::string& path) {
    const fs::path tmp = fs::path(path).concat(".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("save_manifest: cannot open " + tmp.string());
        for (const DatasetRecord& r : records) out << r.to_json() << "\n";
        if (!out) throw IoError("save_manifest: write failed");
    }
    fs::rename(tmp, path);
}

std::vector<DatasetRecord> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("load_manifest: cannot open " + path);
    std::vector<DatasetRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(DatasetRecord::from_json(line));
    }
    return records;
}

std::vector<DatasetRecord> build_dataset(const DatasetBuildConfig& cfg) {
    if (cfg.out_dir.empty()) throw InvalidArgument("build_dataset: out_dir required");
    if (cfg.levels.empty()) throw InvalidArgument("build_dataset: at least one level required");
    const fs::path root(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(root / "hq", ec);
    for (int lv : cfg.levels) fs::create_directories(root / ("lq" + std::to_string(lv)), ec);
    if (!fs::exists(root)) throw IoError("build_dataset: cannot create " + root.string());

    std::vector<DatasetRecord> records;
    const int total = cfg.train_count + cfg.test_count;
    for (int i = 0; i < total; ++i) {
        const bool is_train = i < cfg.train_count;
        DatasetRecord rec;
        char idbuf[32];
        std::snprintf(idbuf, sizeof(idbuf), "%s_%05d", is_train ? "train" : "test", is_train ? i : i - cfg.train_count);
        rec.id = idbuf;
        rec.split = is_train ? "train" : "test";

        SceneSpec spec = cfg.scene;
        Scene scene;
        std::uint64_t scene_seed = Rng::derive_seed(cfg.seed, rec.id);
        for (int attempt = 0;; ++attempt) {
            spec.seed = scene_seed;
            try {
                scene = render_scene(spec);
                break;
            } catch (const Error&) {
                if (attempt >= 8) throw;
                scene_seed = Rng::derive_seed(scene_seed, 0x72657472ull);  // crowded; reroll
            }
        }
        rec.seed = scene_seed;
        rec.height = spec.height;
        rec.width = spec.width;
        rec.instances = scene.instances;
        rec.hq_path = "hq/" + rec.id + ".ppm";
        write_ppm(scene.image, (root / rec.hq_path).string());

        std::vector<int> rec_levels;
        if (is_train && cfg.train_one_level)
            rec_levels = {cfg.levels[i % cfg.levels.size()]};
        else
            rec_levels = cfg.levels;
        for (int lv : rec_levels) {
            LqEntry e;
            e.level = lv;
            e.recipe = make_recipe(lv, Rng::derive_seed(scene_seed, 0x6c71ull + lv), cfg.degrade);
            e.path = "lq" + std::to_string(lv) + "/" + rec.id + ".ppm";
            const ImageBuffer hq = read_ppm((root / rec.hq_path).string());  // degrade the stored 8-bit image
            write_ppm(degrade(hq, e.recipe), (root / e.path).string());
            rec.lq.push_back(e);
        }
        records.push_back(std::move(rec));
    }
    save_manifest(records, (root / "manifest.jsonl").string());
    return records;
}

std::string PredictionRecord::to_json() const {
    nlohmann::ordered_json j;
    j["id"] = id;
    auto insts = nlohmann::ordered_json::array();
    for (const TextInstance& inst : instances) insts.push_back(instance_to_json(inst));
    j["instances"] = insts;
    return j.dump();
}

PredictionRecord PredictionRecord::from_json(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    PredictionRecord r;
    r.id = j.at("id").get<std::string>();
    for (const auto& inst : j.at("instances")) r.instances.push_back(instance_from_json(inst));
    return r;
}

void save_predictions(const std::vector<PredictionRecord>& preds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("save_predictions: cannot open " + path);
    for (const PredictionRecord& p : preds) out << p.to_json() << "\n";
}

std::vector<PredictionRecord> load_predictions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("load_predictions: cannot open " + path);
    std::vector<PredictionRecord> preds;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        preds.push_back(PredictionRecord::from_json(line));
    }
    return preds;
}

}  // namespace tere
