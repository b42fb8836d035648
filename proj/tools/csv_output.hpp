// csv_output.hpp: deterministic CSV/manifest writing for the qent CLI.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qent_cli {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Renders `%.12e` cells, comma separated, '\n' line endings.
std::string render_csv(const Table& table);

/// Writes `content` to `path` via a temporary sibling and rename; "-" means
/// stdout. Throws IoError.
void write_atomically(const std::string& path, const std::string& content);

std::string render_manifest(const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace qent_cli
