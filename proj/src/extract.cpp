#include "termkit/extract.hpp"

#include "termkit/errors.hpp"
#include "termkit/io.hpp"
#include "termkit/textutil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>

namespace termkit::extract {

namespace {

using tagger::Pos;
using tagger::TaggedToken;

// Translate a pattern over {N, Adj, PP} into a character regex over the
// symbols N/A/P used to render tag sequences.
std::string translate_pattern(const std::string& pattern) {
    std::string out;
    std::size_t i = 0;
    while (i < pattern.size()) {
        char c = pattern[i];
        if (text::is_space(c)) {
            ++i;
            continue;
        }
        if (pattern.compare(i, 3, "Adj") == 0) {
            out += 'A';
            i += 3;
            continue;
        }
        if (pattern.compare(i, 2, "PP") == 0) {
            out += 'P';
            i += 2;
            continue;
        }
        if (c == 'N') {
            out += 'N';
            ++i;
            continue;
        }
        if (c == '(' || c == ')' || c == '|' || c == '*' || c == '+' || c == '?') {
            out += c;
            ++i;
            continue;
        }
        throw FormatError(std::string("invalid POS pattern symbol '") + c + "' in: " + pattern);
    }
    return out;
}

std::string tag_string(const std::vector<TaggedToken>& sentence) {
    std::string s;
    s.reserve(sentence.size());
    for (const auto& t : sentence) s += tagger::pos_symbol(t.pos);
    return s;
}

struct Occurrence {
    std::size_t start = 0;
    std::size_t len = 0;
    std::size_t cand = 0; // index into CandidateSet::terms
};

} // namespace

const PosPattern& builtin_pattern(const std::string& language) {
    static const PosPattern english{"en", "(N|Adj)* N"};
    static const PosPattern german{"de", "(Adj* N)|(N N)"};
    // Head-initial Romance languages: noun first, modifiers after.
    static const std::unordered_map<std::string, PosPattern> head_initial = {
        {"fr", {"fr", "(N (N|Adj)*)|(N PP N (N|Adj)*)"}},
        {"es", {"es", "(N (N|Adj)*)|(N PP N (N|Adj)*)"}},
        {"it", {"it", "(N (N|Adj)*)|(N PP N (N|Adj)*)"}},
        {"pt", {"pt", "(N (N|Adj)*)|(N PP N (N|Adj)*)"}},
    };
    // Default for the remaining supported languages (head-final reading).
    static const std::unordered_map<std::string, PosPattern> head_final = {
        {"ar", {"ar", "((N|Adj)* N)|((N|Adj)* N PP N)"}},
        {"zh", {"zh", "((N|Adj)* N)|((N|Adj)* N PP N)"}},
        {"ja", {"ja", "((N|Adj)* N)|((N|Adj)* N PP N)"}},
        {"ru", {"ru", "((N|Adj)* N)|((N|Adj)* N PP N)"}},
    };
    if (language == "en") return english;
    if (language == "de") return german;
    if (auto it = head_initial.find(language); it != head_initial.end()) return it->second;
    if (auto it = head_final.find(language); it != head_final.end()) return it->second;
    throw UnsupportedLanguageError("no POS pattern for language: " + language);
}

std::string CandidateSet::key_of(const std::vector<std::string>& words) {
    return text::join(words, " ");
}

const CandidateTerm* CandidateSet::find(const std::string& key) const {
    auto it = index.find(key);
    return it == index.end() ? nullptr : &terms[it->second];
}

CandidateSet generate_candidates(const std::vector<std::vector<TaggedToken>>& sentences,
                                 const PosPattern& pattern, std::size_t max_len) {
    std::regex re;
    try {
        re.assign(translate_pattern(pattern.pattern));
    } catch (const std::regex_error& e) {
        throw FormatError("cannot compile POS pattern '" + pattern.pattern + "': " + e.what());
    }

    CandidateSet set;
    std::vector<std::vector<Occurrence>> per_sentence(sentences.size());

    for (std::size_t s = 0; s < sentences.size(); ++s) {
        const auto& sent = sentences[s];
        const std::string tags = tag_string(sent);
        const std::size_t n = sent.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t len = 1; len <= max_len && i + len <= n; ++len) {
                if (!std::regex_match(tags.begin() + static_cast<std::ptrdiff_t>(i),
                                      tags.begin() + static_cast<std::ptrdiff_t>(i + len), re)) {
                    continue;
                }
                std::vector<std::string> words;
                words.reserve(len);
                for (std::size_t k = i; k < i + len; ++k) words.push_back(sent[k].token.surface);
                std::string key = CandidateSet::key_of(words);
                auto [it, inserted] = set.index.try_emplace(key, set.terms.size());
                if (inserted) {
                    set.terms.push_back(CandidateTerm{std::move(words), 0, 0, 0});
                    set.superterm_keys.emplace_back();
                }
                set.terms[it->second].freq += 1;
                per_sentence[s].push_back(Occurrence{i, len, it->second});
            }
        }
    }

    // nested_freq: occurrences lying strictly inside a longer candidate's
    // occurrence within the same sentence.
    for (const auto& occs : per_sentence) {
        for (const Occurrence& o : occs) {
            bool nested = std::any_of(occs.begin(), occs.end(), [&](const Occurrence& c) {
                return c.len > o.len && c.start <= o.start && c.start + c.len >= o.start + o.len;
            });
            if (nested) set.terms[o.cand].nested_freq += 1;
        }
    }

    // superterm sets: for every candidate, every proper contiguous
    // subsequence that is itself a candidate gains it as a superterm.
    for (std::size_t b = 0; b < set.terms.size(); ++b) {
        const auto& words = set.terms[b].words;
        const std::string& bkey = CandidateSet::key_of(words);
        if (words.size() < 2) continue;
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t len = 1; len < words.size() && i + len <= words.size(); ++len) {
                std::vector<std::string> sub(words.begin() + static_cast<std::ptrdiff_t>(i),
                                             words.begin() + static_cast<std::ptrdiff_t>(i + len));
                auto it = set.index.find(CandidateSet::key_of(sub));
                if (it != set.index.end()) set.superterm_keys[it->second].insert(bkey);
            }
        }
    }
    for (std::size_t i = 0; i < set.terms.size(); ++i) {
        set.terms[i].superterm_count = static_cast<std::int64_t>(set.superterm_keys[i].size());
    }
    return set;
}

CandidateSet generate_candidates(const std::vector<std::vector<TaggedToken>>& sentences,
                                 const std::string& language, std::size_t max_len) {
    return generate_candidates(sentences, builtin_pattern(language), max_len);
}

namespace {

// Rebuild a CandidateSet after renaming keys: counts of candidates mapped
// to the same target are summed, superterm keys are mapped through the
// rename table and unioned, and |T_a| is recomputed from the result.
CandidateSet apply_renames(const CandidateSet& set,
                           const std::unordered_map<std::string, std::string>& rename) {
    CandidateSet out;
    auto target_of = [&](const std::string& key) -> const std::string& {
        auto it = rename.find(key);
        return it == rename.end() ? key : it->second;
    };
    for (std::size_t i = 0; i < set.terms.size(); ++i) {
        const CandidateTerm& c = set.terms[i];
        const std::string key = CandidateSet::key_of(c.words);
        const std::string& target = target_of(key);
        auto [it, inserted] = out.index.try_emplace(target, out.terms.size());
        if (inserted) {
            const std::size_t src = set.index.at(target); // target key always exists
            out.terms.push_back(CandidateTerm{set.terms[src].words, 0, 0, 0});
            out.superterm_keys.emplace_back();
        }
        CandidateTerm& dst = out.terms[it->second];
        dst.freq += c.freq;
        dst.nested_freq += c.nested_freq;
        for (const std::string& sk : set.superterm_keys[i]) {
            out.superterm_keys[it->second].insert(target_of(sk));
        }
    }
    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        out.terms[i].superterm_count = static_cast<std::int64_t>(out.superterm_keys[i].size());
    }
    return out;
}

} // namespace

CandidateSet merge_morphology(const CandidateSet& set, const std::string& language) {
    // Phase 1: plural counts onto an existing singular form. Plural-only
    // candidates ("big data") stay as they are.
    std::unordered_map<std::string, std::string> rename;
    for (const CandidateTerm& c : set.terms) {
        std::vector<std::string> singular = c.words;
        singular.back() = tagger::singularize(singular.back(), language);
        if (singular.back() == c.words.back()) continue;
        std::string skey = CandidateSet::key_of(singular);
        if (set.index.count(skey)) rename[CandidateSet::key_of(c.words)] = skey;
    }
    CandidateSet merged = rename.empty() ? set : apply_renames(set, rename);

    // Phase 2: variants identical up to the case of the first character
    // merge onto the higher-frequency variant (tie: lowercase wins).
    std::unordered_map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < merged.terms.size(); ++i) {
        std::string lkey = CandidateSet::key_of(merged.terms[i].words);
        if (!lkey.empty() && text::is_ascii_upper(lkey[0])) {
            lkey[0] = static_cast<char>(lkey[0] - 'A' + 'a');
        }
        groups[lkey].push_back(i);
    }
    std::unordered_map<std::string, std::string> case_rename;
    for (const auto& [lkey, members] : groups) {
        if (members.size() < 2) continue;
        std::size_t winner = members[0];
        for (std::size_t m : members) {
            const auto& cand = merged.terms[m];
            const auto& best = merged.terms[winner];
            if (cand.freq > best.freq) {
                winner = m;
            } else if (cand.freq == best.freq &&
                       CandidateSet::key_of(cand.words) == lkey) { // lowercase variant
                winner = m;
            }
        }
        const std::string wkey = CandidateSet::key_of(merged.terms[winner].words);
        for (std::size_t m : members) {
            const std::string mkey = CandidateSet::key_of(merged.terms[m].words);
            if (mkey != wkey) case_rename[mkey] = wkey;
        }
    }
    return case_rename.empty() ? merged : apply_renames(merged, case_rename);
}

std::vector<ScoredTerm> cvalue_scores(const CandidateSet& set, double unigram_constant) {
    if (!(unigram_constant > 0.0)) {
        throw std::invalid_argument("unigram_constant must be positive");
    }
    std::vector<ScoredTerm> out;
    out.reserve(set.terms.size());
    for (const CandidateTerm& c : set.terms) {
        const double w = std::log2(static_cast<double>(c.words.size()) + unigram_constant);
        double score;
        if (c.superterm_count == 0) {
            score = w * static_cast<double>(c.freq);
        } else {
            score = w * (static_cast<double>(c.freq) -
                         static_cast<double>(c.nested_freq) /
                             static_cast<double>(c.superterm_count));
        }
        out.push_back(ScoredTerm{c, score});
    }
    return out;
}

namespace {

std::vector<std::string> lower_words(const CandidateTerm& c) {
    std::vector<std::string> out;
    out.reserve(c.words.size());
    for (const auto& w : c.words) out.push_back(text::to_lower(w));
    return out;
}

} // namespace

std::vector<ScoredTerm> filter_terms(std::vector<ScoredTerm> scored,
                                     const std::unordered_set<std::string>& stoplist,
                                     const std::unordered_set<std::string>& common_unigrams,
                                     bool anchored_subset_filter) {
    std::vector<ScoredTerm> kept;
    kept.reserve(scored.size());
    for (auto& st : scored) {
        const auto words = lower_words(st.candidate);
        bool stopped = std::any_of(words.begin(), words.end(),
                                   [&](const std::string& w) { return stoplist.count(w) > 0; });
        if (stopped) continue;
        if (words.size() == 1 && common_unigrams.count(words[0])) continue;
        kept.push_back(std::move(st));
    }
    if (!anchored_subset_filter) return kept;

    // Every proper prefix and proper suffix of a surviving term is marked;
    // marked terms are anchored subsets and get dropped.
    std::unordered_set<std::string> anchored;
    for (const auto& st : kept) {
        const auto words = lower_words(st.candidate);
        for (std::size_t len = 1; len < words.size(); ++len) {
            anchored.insert(text::join({words.begin(), words.begin() + static_cast<std::ptrdiff_t>(len)}, " "));
            anchored.insert(text::join({words.end() - static_cast<std::ptrdiff_t>(len), words.end()}, " "));
        }
    }
    std::vector<ScoredTerm> out;
    out.reserve(kept.size());
    for (auto& st : kept) {
        if (!anchored.count(text::join(lower_words(st.candidate), " "))) {
            out.push_back(std::move(st));
        }
    }
    return out;
}

std::vector<ScoredTerm> rank_top_n(std::vector<ScoredTerm> scored, std::size_t n) {
    if (n < 1) throw std::invalid_argument("rank_top_n: n must be >= 1");
    std::stable_sort(scored.begin(), scored.end(), [](const ScoredTerm& a, const ScoredTerm& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.candidate.freq != b.candidate.freq) return a.candidate.freq > b.candidate.freq;
        return CandidateSet::key_of(a.candidate.words) < CandidateSet::key_of(b.candidate.words);
    });
    if (scored.size() > n) scored.resize(n);
    return scored;
}

std::unordered_set<std::string> load_word_set(const std::filesystem::path& path) {
    std::unordered_set<std::string> out;
    std::istringstream in(io::read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        std::string_view v = text::trim(line);
        if (v.empty() || v.front() == '#') continue;
        out.insert(text::to_lower(v));
    }
    return out;
}

std::string terms_to_tsv(const std::vector<ScoredTerm>& terms) {
    std::string out = "term\tscore\tfreq\tlength\n";
    char buf[64];
    for (const auto& st : terms) {
        std::snprintf(buf, sizeof(buf), "%.4f", st.score);
        out += CandidateSet::key_of(st.candidate.words);
        out += '\t';
        out += buf;
        out += '\t';
        out += std::to_string(st.candidate.freq);
        out += '\t';
        out += std::to_string(st.candidate.words.size());
        out += '\n';
    }
    return out;
}

std::vector<ScoredTerm> terms_from_tsv(const std::string& tsv) {
    std::vector<ScoredTerm> out;
    std::istringstream in(tsv);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto cols = text::split(line, '\t');
        if (lineno == 1 && !cols.empty() && cols[0] == "term") continue; // header
        if (cols.size() != 4) {
            throw FormatError("term TSV line " + std::to_string(lineno) +
                              ": expected 4 columns, got " + std::to_string(cols.size()));
        }
        ScoredTerm st;
        for (const auto& w : text::split(cols[0], ' ')) {
            if (!w.empty()) st.candidate.words.push_back(w);
        }
        if (st.candidate.words.empty()) {
            throw FormatError("term TSV line " + std::to_string(lineno) + ": empty term");
        }
        try {
            st.score = std::stod(cols[1]);
            st.candidate.freq = std::stoll(cols[2]);
        } catch (const std::exception&) {
            throw FormatError("term TSV line " + std::to_string(lineno) + ": bad number");
        }
        out.push_back(std::move(st));
    }
    return out;
}

} // namespace termkit::extract
