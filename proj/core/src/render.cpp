#include "nuca/render.hpp"

#include <fstream>
#include <sstream>

namespace nuca {

std::string trace_to_csv(const Trace& tr) {
    std::string out;
    for (std::size_t t = 0; t < tr.values.size(); ++t) {
        out += std::to_string(t) + "," + std::to_string(static_cast<int>(tr.values[t])) + "\n";
    }
    return out;
}

std::string evolution_to_csv(const Evolution& ev) {
    std::string out;
    for (std::int64_t t = 0; t <= ev.steps(); ++t) {
        out += std::to_string(t);
        for (std::uint8_t s : ev.row(t)) {
            out += "," + std::to_string(static_cast<int>(s));
        }
        out += "\n";
    }
    return out;
}

std::string spacetime_to_pgm(const Evolution& ev) {
    const std::size_t width = ev.target_cells().size();
    const std::int64_t height = ev.steps() + 1;
    std::string out = "P2\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    for (std::int64_t t = 0; t < height; ++t) {
        const auto row = ev.row(t);
        for (std::size_t j = 0; j < width; ++j) {
            if (j > 0) {
                out += ' ';
            }
            out += std::to_string(255 * static_cast<int>(row[j]) / (ev.q() - 1));
        }
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw DomainError("cannot open '" + path + "' for writing");
    }
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw DomainError("failed writing '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw DomainError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace nuca
