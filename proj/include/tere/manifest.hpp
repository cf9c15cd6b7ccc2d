#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tere/degrade.hpp"
#include "tere/scenegen.hpp"
#include "tere/text_instance.hpp"

namespace tere {

struct LqEntry {
    int level = 1;
    std::string path;  // relative to the manifest directory
    DegradationRecipe recipe;
};

struct DatasetRecord {
    std::string id;
    std::string split;  // train | test
    int height = 0, width = 0;
    std::string hq_path;  // relative to the manifest directory
    std::vector<LqEntry> lq;
    std::vector<TextInstance> instances;
    std::uint64_t seed = 0;

    std::string to_json() const;
    static DatasetRecord from_json(const std::string& line);
};

// Line-delimited records; byte-stable serialization so reload == re-emit.
void save_manifest(const std::vector<DatasetRecord>& records, const std::string& path);
std::vector<DatasetRecord> load_manifest(const std::string& path);

struct DatasetBuildConfig {
    SceneSpec scene;  // seed field ignored; per-record seeds derive from `seed`
    DegradeConfig degrade;
    int train_count = 8;
    int test_count = 2;
    std::vector<int> levels = {1, 2, 3};
    bool train_one_level = true;  // train records carry one LQ level, tests all
    std::uint64_t seed = 0;
    std::string out_dir;
};

// Renders HQ scenes, applies degradation chains, writes rasters and the
// manifest (manifest.jsonl in out_dir). Returns the records written.
std::vector<DatasetRecord> build_dataset(const DatasetBuildConfig& cfg);

// Shared helpers for prediction dumps (spot/eval exchange format).
struct PredictionRecord {
    std::string id;
    std::vector<TextInstance> instances;

    std::string to_json() const;
    static PredictionRecord from_json(const std::string& line);
};

void save_predictions(const std::vector<PredictionRecord>& preds, const std::string& path);
std::vector<PredictionRecord> load_predictions(const std::string& path);

}  // namespace tere
