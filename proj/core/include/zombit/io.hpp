#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace zombit::io {

inline void write_u64(std::ostream& os, uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(buf, 8);
}

inline uint64_t read_u64(std::istream& is) {
    char buf[8];
    is.read(buf, 8);
    if (!is) throw std::runtime_error("zombit: truncated stream");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return v;
}

inline void write_u8(std::ostream& os, uint8_t v) {
    os.put(static_cast<char>(v));
}

inline uint8_t read_u8(std::istream& is) {
    int c = is.get();
    if (c == EOF) throw std::runtime_error("zombit: truncated stream");
    return static_cast<uint8_t>(c);
}

inline void check_magic(std::istream& is, uint64_t expected, const char* what) {
    if (read_u64(is) != expected)
        throw std::runtime_error(std::string("zombit: bad magic for ") + what);
}

} // namespace zombit::io
