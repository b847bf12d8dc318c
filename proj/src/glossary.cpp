#include "termkit/glossary.hpp"

#include "termkit/io.hpp"
#include "termkit/tagger.hpp"
#include "termkit/textutil.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <unordered_map>

namespace termkit::glossary {

namespace {

std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", score);
    return buf;
}

int provenance_priority(Provenance p) {
    switch (p) {
    case Provenance::Edited: return 2;
    case Provenance::UserAdded: return 1;
    case Provenance::Auto: return 0;
    }
    return 0;
}

/// "# name: value" -> value; "# name:" -> "".
std::optional<std::string> comment_value(std::string_view line, std::string_view field) {
    std::string prefix = "# ";
    prefix += field;
    prefix += ':';
    if (!line.starts_with(prefix)) return std::nullopt;
    std::string_view rest = line.substr(prefix.size());
    if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    return std::string(rest);
}

} // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::Auto: return "auto";
    case Provenance::Edited: return "edited";
    case Provenance::UserAdded: return "user_added";
    }
    return "auto";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "auto") return Provenance::Auto;
    if (name == "edited") return Provenance::Edited;
    if (name == "user_added") return Provenance::UserAdded;
    throw FormatError("unknown provenance '" + name + "'");
}

bool GlossaryEntry::needs_review() const {
    if (provenance != Provenance::Auto) return false;
    if (translations.empty()) return true;
    return std::any_of(translations.begin(), translations.end(),
                       [](const auto& kv) { return kv.second.empty(); });
}

const GlossaryEntry* Glossary::find(const std::string& source_term) const {
    const std::string key = text::normalize_key(source_term);
    for (const auto& entry : entries)
        if (text::normalize_key(entry.source_term) == key) return &entry;
    return nullptr;
}

EditResult apply_edits(const Glossary& glossary, const std::vector<Edit>& edits) {
    EditResult result{glossary, {}};
    auto& g = result.glossary;

    auto find_index = [&g](const std::string& term) -> std::optional<std::size_t> {
        const std::string key = text::normalize_key(term);
        for (std::size_t i = 0; i < g.entries.size(); ++i)
            if (text::normalize_key(g.entries[i].source_term) == key) return i;
        return std::nullopt;
    };

    for (const auto& edit : edits) {
        switch (edit.op) {
        case EditOp::SetTranslation: {
            if (!tagger::is_supported_language(edit.target_lang)) {
                result.errors.push_back("set_translation: unsupported language '" +
                                        edit.target_lang + "'");
                break;
            }
            auto idx = find_index(edit.source_term);
            if (!idx) {
                result.errors.push_back("set_translation: no entry '" + edit.source_term + "'");
                break;
            }
            g.entries[*idx].translations[edit.target_lang] = edit.translation;
            g.entries[*idx].provenance = Provenance::Edited;
            break;
        }
        case EditOp::AddEntry: {
            if (edit.source_term.empty()) {
                result.errors.push_back("add_entry: empty source term");
                break;
            }
            if (find_index(edit.source_term)) {
                result.errors.push_back("add_entry: entry '" + edit.source_term +
                                        "' already exists");
                break;
            }
            bool bad_lang = false;
            for (const auto& [lang, _] : edit.translations) {
                if (!tagger::is_supported_language(lang)) {
                    result.errors.push_back("add_entry: unsupported language '" + lang + "'");
                    bad_lang = true;
                    break;
                }
            }
            if (bad_lang) break;
            GlossaryEntry entry;
            entry.source_term = edit.source_term;
            entry.source_lang = g.source_lang;
            entry.translations = edit.translations;
            entry.provenance = Provenance::UserAdded;
            g.entries.push_back(std::move(entry));
            break;
        }
        case EditOp::DeleteEntry: {
            auto idx = find_index(edit.source_term);
            if (!idx) {
                result.errors.push_back("delete_entry: no entry '" + edit.source_term + "'");
                break;
            }
            g.entries.erase(g.entries.begin() + static_cast<std::ptrdiff_t>(*idx));
            break;
        }
        case EditOp::RenameSource: {
            auto idx = find_index(edit.source_term);
            if (!idx) {
                result.errors.push_back("rename_source: no entry '" + edit.source_term + "'");
                break;
            }
            if (edit.new_source.empty()) {
                result.errors.push_back("rename_source: empty new source term");
                break;
            }
            auto clash = find_index(edit.new_source);
            if (clash && *clash != *idx) {
                result.errors.push_back("rename_source: entry '" + edit.new_source +
                                        "' already exists");
                break;
            }
            g.entries[*idx].source_term = edit.new_source;
            g.entries[*idx].provenance = Provenance::Edited;
            break;
        }
        }
    }
    return result;
}

std::vector<Edit> load_edits(const std::filesystem::path& file) {
    const std::string content = io::read_file(file);
    std::vector<Edit> edits;
    std::size_t line_no = 0;
    for (const auto& raw : text::split(content, '\n')) {
        ++line_no;
        std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw FormatError("edits " + file.string() + " line " + std::to_string(line_no) +
                              ": " + e.what());
        }
        auto require = [&](const char* field) -> std::string {
            if (!j.contains(field) || !j[field].is_string())
                throw FormatError("edits " + file.string() + " line " + std::to_string(line_no) +
                                  ": missing string field '" + field + "'");
            return j[field].get<std::string>();
        };
        Edit edit;
        const std::string op = require("op");
        edit.source_term = require("source_term");
        if (op == "set_translation") {
            edit.op = EditOp::SetTranslation;
            edit.target_lang = require("target_lang");
            edit.translation = require("translation");
        } else if (op == "add_entry") {
            edit.op = EditOp::AddEntry;
            if (j.contains("translations")) {
                if (!j["translations"].is_object())
                    throw FormatError("edits " + file.string() + " line " +
                                      std::to_string(line_no) + ": 'translations' must be an object");
                for (const auto& [lang, value] : j["translations"].items()) {
                    if (!value.is_string())
                        throw FormatError("edits " + file.string() + " line " +
                                          std::to_string(line_no) + ": translation values must be strings");
                    edit.translations[lang] = value.get<std::string>();
                }
            }
        } else if (op == "delete_entry") {
            edit.op = EditOp::DeleteEntry;
        } else if (op == "rename_source") {
            edit.op = EditOp::RenameSource;
            edit.new_source = require("new_source");
        } else {
            throw FormatError("edits " + file.string() + " line " + std::to_string(line_no) +
                              ": unknown op '" + op + "'");
        }
        edits.push_back(std::move(edit));
    }
    return edits;
}

Glossary merge_glossaries(const Glossary& a, const Glossary& b) {
    if (a.source_lang != b.source_lang)
        throw MergeError("cannot merge glossaries with source languages '" + a.source_lang +
                         "' and '" + b.source_lang + "'");
    Glossary out;
    out.name = a.name.empty() ? b.name : a.name;
    out.source_lang = a.source_lang;
    out.entries = a.entries;

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        index[text::normalize_key(out.entries[i].source_term)] = i;

    for (const auto& entry : b.entries) {
        const std::string key = text::normalize_key(entry.source_term);
        auto it = index.find(key);
        if (it == index.end()) {
            index[key] = out.entries.size();
            out.entries.push_back(entry);
            continue;
        }
        GlossaryEntry& kept = out.entries[it->second];
        const int kept_prio = provenance_priority(kept.provenance);
        const int new_prio = provenance_priority(entry.provenance);
        if (new_prio > kept_prio || (new_prio == kept_prio && entry.score > kept.score))
            kept = entry;
    }
    return out;
}

std::string to_tsv(const Glossary& glossary) {
    std::set<std::string> targets;
    for (const auto& entry : glossary.entries)
        for (const auto& [lang, _] : entry.translations) targets.insert(lang);

    std::string out;
    out += "# name:" + (glossary.name.empty() ? "" : " " + glossary.name) + "\n";
    out += "# source_lang:" +
           (glossary.source_lang.empty() ? "" : " " + glossary.source_lang) + "\n";
    out += "source_term\tscore\tprovenance";
    for (const auto& target : targets) out += "\t" + target;
    out += "\n";
    for (const auto& entry : glossary.entries) {
        out += entry.source_term + "\t" + format_score(entry.score) + "\t" +
               provenance_name(entry.provenance);
        for (const auto& target : targets) {
            auto it = entry.translations.find(target);
            out += "\t" + (it == entry.translations.end() ? std::string() : it->second);
        }
        out += "\n";
    }
    return out;
}

Glossary from_tsv(const std::string& tsv) {
    Glossary glossary;
    std::vector<std::string> targets;
    bool header_seen = false;
    std::size_t line_no = 0;
    for (const auto& line : text::split(tsv, '\n')) {
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (auto name = comment_value(line, "name")) glossary.name = *name;
            else if (auto lang = comment_value(line, "source_lang")) glossary.source_lang = *lang;
            continue;
        }
        auto cols = text::split(line, '\t');
        if (!header_seen) {
            if (cols.size() < 3 || cols[0] != "source_term" || cols[1] != "score" ||
                cols[2] != "provenance")
                throw FormatError("glossary TSV line " + std::to_string(line_no) +
                                  ": bad header");
            targets.assign(cols.begin() + 3, cols.end());
            header_seen = true;
            continue;
        }
        if (cols.size() != 3 + targets.size())
            throw FormatError("glossary TSV line " + std::to_string(line_no) + ": expected " +
                              std::to_string(3 + targets.size()) + " columns, got " +
                              std::to_string(cols.size()));
        GlossaryEntry entry;
        entry.source_term = cols[0];
        entry.source_lang = glossary.source_lang;
        try {
            std::size_t consumed = 0;
            entry.score = std::stod(cols[1], &consumed);
            if (consumed != cols[1].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw FormatError("glossary TSV line " + std::to_string(line_no) +
                              ": bad score '" + cols[1] + "'");
        }
        entry.provenance = provenance_from_name(cols[2]);
        for (std::size_t i = 0; i < targets.size(); ++i)
            entry.translations[targets[i]] = cols[3 + i];
        glossary.entries.push_back(std::move(entry));
    }
    if (!header_seen) throw FormatError("glossary TSV: missing header row");
    return glossary;
}

nlohmann::json to_json(const Glossary& glossary) {
    nlohmann::json j;
    j["name"] = glossary.name;
    j["source_lang"] = glossary.source_lang;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& entry : glossary.entries) {
        nlohmann::json je;
        je["source_term"] = entry.source_term;
        je["score"] = entry.score;
        je["provenance"] = provenance_name(entry.provenance);
        je["translations"] = nlohmann::json(entry.translations);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

Glossary from_json(const nlohmann::json& j) {
    try {
        Glossary glossary;
        glossary.name = j.at("name").get<std::string>();
        glossary.source_lang = j.at("source_lang").get<std::string>();
        for (const auto& je : j.at("entries")) {
            GlossaryEntry entry;
            entry.source_term = je.at("source_term").get<std::string>();
            entry.source_lang = glossary.source_lang;
            entry.score = je.at("score").get<double>();
            entry.provenance = provenance_from_name(je.at("provenance").get<std::string>());
            for (const auto& [lang, value] : je.at("translations").items())
                entry.translations[lang] = value.get<std::string>();
            glossary.entries.push_back(std::move(entry));
        }
        return glossary;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("glossary JSON: ") + e.what());
    }
}

void save_tsv(const Glossary& glossary, const std::filesystem::path& path) {
    io::write_file_atomic(path, to_tsv(glossary));
}

Glossary load_tsv(const std::filesystem::path& path) {
    try {
        return from_tsv(io::read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_json(const Glossary& glossary, const std::filesystem::path& path) {
    io::write_file_atomic(path, to_json(glossary).dump(2) + "\n");
}

Glossary load_json(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(io::read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return from_json(j);
}

void save_glossary(const Glossary& glossary, const std::filesystem::path& path) {
    const std::string ext = text::to_lower(path.extension().string());
    if (ext == ".tsv") return save_tsv(glossary, path);
    if (ext == ".json") return save_json(glossary, path);
    throw FormatError("glossary path must end in .tsv or .json: " + path.string());
}

Glossary load_glossary(const std::filesystem::path& path) {
    const std::string ext = text::to_lower(path.extension().string());
    if (ext == ".tsv") return load_tsv(path);
    if (ext == ".json") return load_json(path);
    throw FormatError("glossary path must end in .tsv or .json: " + path.string());
}

} // namespace termkit::glossary
