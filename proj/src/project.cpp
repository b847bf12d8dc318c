#include "termkit/project.hpp"

#include "termkit/errors.hpp"
#include "termkit/io.hpp"

#include <set>

namespace termkit::project {

nlohmann::json config_to_json(const ProjectConfig& config) {
    return nlohmann::json{
        {"name", config.name},
        {"source_lang", config.source_lang},
        {"target_langs", config.target_langs},
        {"top_n", config.top_n},
        {"unigram_constant", config.unigram_constant},
        {"suppression_window_ms", config.suppression_window_ms},
        {"corpus_dir", config.corpus_dir},
        {"glossary_file", config.glossary_file},
        {"gazetteer_file", config.gazetteer_file},
        {"reports_dir", config.reports_dir},
        {"stoplist_file", config.stoplist_file},
        {"common_unigrams_file", config.common_unigrams_file},
        {"dictionary_file", config.dictionary_file},
    };
}

ProjectConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw FormatError("project config must be a JSON object");
    static const std::set<std::string> known = {
        "name",          "source_lang",        "target_langs",
        "top_n",         "unigram_constant",   "suppression_window_ms",
        "corpus_dir",    "glossary_file",      "gazetteer_file",
        "reports_dir",   "stoplist_file",      "common_unigrams_file",
        "dictionary_file",
    };
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw FormatError("unknown project config key \"" + key + "\"");

    ProjectConfig config;
    try {
        if (j.contains("name")) config.name = j["name"].get<std::string>();
        if (j.contains("source_lang")) config.source_lang = j["source_lang"].get<std::string>();
        if (j.contains("target_langs"))
            config.target_langs = j["target_langs"].get<std::vector<std::string>>();
        if (j.contains("top_n")) config.top_n = j["top_n"].get<std::size_t>();
        if (j.contains("unigram_constant"))
            config.unigram_constant = j["unigram_constant"].get<double>();
        if (j.contains("suppression_window_ms"))
            config.suppression_window_ms = j["suppression_window_ms"].get<std::int64_t>();
        if (j.contains("corpus_dir")) config.corpus_dir = j["corpus_dir"].get<std::string>();
        if (j.contains("glossary_file"))
            config.glossary_file = j["glossary_file"].get<std::string>();
        if (j.contains("gazetteer_file"))
            config.gazetteer_file = j["gazetteer_file"].get<std::string>();
        if (j.contains("reports_dir")) config.reports_dir = j["reports_dir"].get<std::string>();
        if (j.contains("stoplist_file"))
            config.stoplist_file = j["stoplist_file"].get<std::string>();
        if (j.contains("common_unigrams_file"))
            config.common_unigrams_file = j["common_unigrams_file"].get<std::string>();
        if (j.contains("dictionary_file"))
            config.dictionary_file = j["dictionary_file"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed project config: ") + e.what());
    }

    if (config.top_n == 0) throw FormatError("project config: top_n must be >= 1");
    if (!(config.unigram_constant > 0.0))
        throw FormatError("project config: unigram_constant must be > 0");
    if (config.suppression_window_ms < 0)
        throw FormatError("project config: suppression_window_ms must be >= 0");
    if (config.source_lang.empty())
        throw FormatError("project config: source_lang must be non-empty");
    return config;
}

ProjectConfig load_config(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(io::read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": invalid JSON: " + e.what());
    }
    try {
        return config_from_json(j);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_config(const ProjectConfig& config, const std::filesystem::path& path) {
    io::write_file_atomic(path, config_to_json(config).dump(2) + "\n");
}

} // namespace termkit::project
