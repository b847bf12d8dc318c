#pragma once

#include <stdexcept>
#include <string>

namespace termkit {

/// Base class for all termkit failures. The `code()` string is stable and
/// machine-readable; the what() message is for humans.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class EmptyCorpusError : public Error {
public:
    explicit EmptyCorpusError(const std::string& message)
        : Error("empty_corpus", message) {}
};

class UnsupportedLanguageError : public Error {
public:
    explicit UnsupportedLanguageError(const std::string& message)
        : Error("unsupported_language", message) {}
};

class CrawlFailedError : public Error {
public:
    explicit CrawlFailedError(const std::string& message)
        : Error("crawl_failed", message) {}
};

/// Malformed input file (manifest, TSV, JSONL, language pack, ...).
class FormatError : public Error {
public:
    explicit FormatError(const std::string& message)
        : Error("format_error", message) {}
};

class FileError : public Error {
public:
    explicit FileError(const std::string& message)
        : Error("file_error", message) {}
};

class MergeError : public Error {
public:
    explicit MergeError(const std::string& message)
        : Error("merge_error", message) {}
};

class CompileError : public Error {
public:
    explicit CompileError(const std::string& message)
        : Error("compile_error", message) {}
};

/// Segments delivered out of order to a stream session.
class OrderingError : public Error {
public:
    explicit OrderingError(const std::string& message)
        : Error("ordering_error", message) {}
};

/// Transcript / suggestion / annotation files do not line up.
class AlignmentError : public Error {
public:
    explicit AlignmentError(const std::string& message)
        : Error("alignment_error", message) {}
};

class EmptyStatsError : public Error {
public:
    explicit EmptyStatsError(const std::string& message)
        : Error("empty_stats", message) {}
};

} // namespace termkit
