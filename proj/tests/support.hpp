#pragma once

#include <fstream>
#include <sstream>
#include <string>

namespace testgen {

inline std::string corpus_path(const std::string& name) { return std::string(EXPSOLVE_CORPUS_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    return s;
}

} // namespace testgen
