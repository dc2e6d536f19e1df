#pragma once

#include <filesystem>
#include <string>

namespace ecrep {

/// Reads a whole file into a string. Throws Error if the file cannot be read.
std::string read_file(const std::filesystem::path& path);

/// Writes content to a temporary file in the target directory and renames it
/// into place, so concurrent readers never observe a half-written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace ecrep
