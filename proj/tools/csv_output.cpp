#include "csv_output.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>

namespace qent_cli {

std::string render_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += table.header[i];
    }
    out += '\n';
    char cell[40];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::snprintf(cell, sizeof cell, "%.12e", row[i]);
            out += cell;
        }
        out += '\n';
    }
    return out;
}

void write_atomically(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open " + tmp + ": " + std::strerror(errno));
        f << content;
        f.flush();
        if (!f) throw IoError("failed writing " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename " + tmp + " to " + path + ": " + std::strerror(errno));
    }
}

std::string render_manifest(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::string out;
    for (const auto& [key, value] : entries) out += key + "=" + value + "\n";
    return out;
}

}  // namespace qent_cli
