#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace termkit::project {

/// One project = one config file. Every field has a usable default, so an
/// empty JSON object is a valid config; command-line flags override
/// whatever the file says.
struct ProjectConfig {
    std::string name = "project";
    std::string source_lang = "en";
    std::vector<std::string> target_langs;
    std::size_t top_n = 100;
    double unigram_constant = 1.0;
    std::int64_t suppression_window_ms = 30000;

    // Artifact locations, all optional (empty = not configured).
    std::string corpus_dir;
    std::string glossary_file;
    std::string gazetteer_file;
    std::string reports_dir;
    std::string stoplist_file;
    std::string common_unigrams_file;
    std::string dictionary_file;

    bool operator==(const ProjectConfig&) const = default;
};

nlohmann::json config_to_json(const ProjectConfig& config);

/// Strict parse: unknown keys are rejected (they are almost always typos in
/// a hand-edited file), as are non-positive top_n / unigram_constant and a
/// negative suppression window. Throws FormatError.
ProjectConfig config_from_json(const nlohmann::json& j);

ProjectConfig load_config(const std::filesystem::path& path);
void save_config(const ProjectConfig& config, const std::filesystem::path& path);

} // namespace termkit::project
