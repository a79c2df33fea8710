#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ptk/poly_io.hpp"

namespace support {

inline std::string golden_path(const std::string& relative) { return std::string(PTK_GOLDEN_DIR) + "/" + relative; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// File contents without the trailing newline.
inline std::string read_golden(const std::string& relative) {
    std::string s = read_file(golden_path(relative));
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

inline ptk::ordered_json read_golden_json(const std::string& relative) {
    return ptk::ordered_json::parse(read_golden(relative));
}

}  // namespace support
