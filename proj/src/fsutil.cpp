#include "ecrep/fsutil.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>

#include "ecrep/errors.hpp"

namespace ecrep {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }

    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    std::ostringstream name;
    name << "." << path.filename().string() << ".tmp-" << rd() << "-" << counter++;
    const fs::path tmp = path.has_parent_path() ? path.parent_path() / name.str()
                                                : fs::path(name.str());

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open temporary file: " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw Error("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

} // namespace ecrep
