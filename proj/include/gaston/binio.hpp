#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "gaston/errors.hpp"

namespace gaston {

// Little-endian binary stream helpers shared by the file formats.
static_assert(std::endian::native == std::endian::little,
              "file formats assume a little-endian host");

inline void write_bytes(std::ostream& os, const void* data, std::size_t n) {
    os.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

template <typename T>
void write_pod(std::ostream& os, T value) {
    write_bytes(os, &value, sizeof(T));
}

inline void read_bytes(std::istream& is, void* data, std::size_t n, const char* what) {
    is.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(is.gcount()) != n) {
        throw FormatError(std::string("truncated file while reading ") + what);
    }
}

template <typename T>
T read_pod(std::istream& is, const char* what) {
    T value;
    read_bytes(is, &value, sizeof(T), what);
    return value;
}

inline void expect_magic(std::istream& is, const char (&magic)[5], const char* format_name) {
    char buf[4];
    read_bytes(is, buf, 4, "magic");
    if (std::memcmp(buf, magic, 4) != 0) {
        throw FormatError(std::string("bad magic, expected ") + format_name);
    }
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open file: " + path);
    return is;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open file for writing: " + path);
    return os;
}

}  // namespace gaston
