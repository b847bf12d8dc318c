#pragma once

#include <filesystem>
#include <string>

namespace termkit::io {

/// Reads a whole file into a string. Throws FileError on failure.
std::string read_file(const std::filesystem::path& path);

/// Writes `content` to `path` atomically: writes to a sibling temp file and
/// renames it into place, so readers never observe a partial file. Creates
/// parent directories as needed. Throws FileError on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace termkit::io
