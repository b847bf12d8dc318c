#pragma once

// Shared helpers for building gold-tagged fixtures in tests.

#include "termkit/tagger.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

namespace testutil {

/// Scoped scratch directory under the system temp dir, removed on scope
/// exit. Unique per process and per instance.
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("termkit-test-" + std::to_string(getpid()) + "-" + std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    static int& counter() {
        static int c = 0;
        return c;
    }
};

inline termkit::tagger::Pos pos_of(char symbol) {
    switch (symbol) {
        case 'N': return termkit::tagger::Pos::N;
        case 'A': return termkit::tagger::Pos::Adj;
        case 'P': return termkit::tagger::Pos::PP;
        default: return termkit::tagger::Pos::Other;
    }
}

/// Builds one gold-tagged sentence from space-separated words and a tag
/// string with one of N/A/P/O per word: tagged("big data", "AN").
inline std::vector<termkit::tagger::TaggedToken> tagged(const std::string& words,
                                                        const std::string& tags,
                                                        std::size_t sentence_index = 0) {
    std::vector<termkit::tagger::TaggedToken> out;
    std::size_t start = 0, w = 0, offset = 0;
    while (start <= words.size()) {
        std::size_t end = words.find(' ', start);
        if (end == std::string::npos) end = words.size();
        if (end > start) {
            termkit::tagger::Token tok{words.substr(start, end - start), offset, sentence_index};
            out.push_back({tok, pos_of(tags.at(w))});
            ++w;
            offset += end - start + 1;
        }
        if (end == words.size()) break;
        start = end + 1;
    }
    return out;
}

/// Random gold-tagged corpus over a small vocabulary with one fixed tag per
/// vocabulary word (consistent tagging, like a dictionary tagger).
struct RandomCorpus {
    std::vector<std::vector<termkit::tagger::TaggedToken>> sentences;
};

inline RandomCorpus random_corpus(std::mt19937& rng, std::size_t max_sentences = 50,
                                  std::size_t vocab_size = 30, std::size_t max_sentence_len = 12) {
    static const char* const stems[] = {"alpha", "beta", "gamma", "delta", "eps", "zeta",
                                        "eta",   "theta", "iota", "kappa", "lam", "mu",
                                        "nu",    "xi",    "omi",  "pi",    "rho", "sigma",
                                        "tau",   "ups",   "phi",  "chi",   "psi", "omega",
                                        "ze",    "on",    "tw",   "th",    "fo",  "fi"};
    std::uniform_int_distribution<int> tag_pick(0, 9);
    std::vector<std::string> vocab;
    std::vector<termkit::tagger::Pos> tags;
    for (std::size_t i = 0; i < vocab_size && i < 30; ++i) {
        vocab.emplace_back(stems[i]);
        // Bias towards N/Adj so patterns actually fire.
        int t = tag_pick(rng);
        tags.push_back(t < 5   ? termkit::tagger::Pos::N
                       : t < 8 ? termkit::tagger::Pos::Adj
                       : t < 9 ? termkit::tagger::Pos::PP
                               : termkit::tagger::Pos::Other);
    }
    std::uniform_int_distribution<std::size_t> n_sent(1, max_sentences);
    std::uniform_int_distribution<std::size_t> n_len(1, max_sentence_len);
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);

    RandomCorpus out;
    std::size_t sentences = n_sent(rng);
    for (std::size_t s = 0; s < sentences; ++s) {
        std::vector<termkit::tagger::TaggedToken> sent;
        std::size_t len = n_len(rng);
        std::size_t offset = 0;
        for (std::size_t i = 0; i < len; ++i) {
            std::size_t v = pick(rng);
            termkit::tagger::Token tok{vocab[v], offset, s};
            sent.push_back({tok, tags[v]});
            offset += vocab[v].size() + 1;
        }
        out.sentences.push_back(std::move(sent));
    }
    return out;
}

} // namespace testutil
