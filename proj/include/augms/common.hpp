// Shared scalar types and small helpers.
#pragma once

#include <cassert>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace augms {

using u8 = uint8_t;
using u16 = uint16_t;
using u32 = uint32_t;
using u64 = uint64_t;
using i64 = int64_t;

// Text position or BWT row that is not set. Domain positions are 1-based,
// so 0 is free to mean "none".
inline constexpr u64 NIL = 0;

inline u64 div_ceil(u64 a, u64 b) { return (a + b - 1) / b; }

// Number of bits needed to store v (at least 1).
inline u32 bits_for(u64 v) {
    u32 w = 1;
    while (v >>= 1) ++w;
    return w;
}

// Little-endian fixed-width stream primitives. The index file format is
// defined in these terms, so they live here rather than in index_io.
template <typename T>
u64 write_pod(std::ostream& out, T v) {
    static_assert(std::is_integral_v<T>);
    u8 buf[sizeof(T)];
    for (size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<u8>(static_cast<u64>(v) >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), sizeof(T));
    return sizeof(T);
}

template <typename T>
T read_pod(std::istream& in) {
    static_assert(std::is_integral_v<T>);
    u8 buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!in) throw std::runtime_error("unexpected end of stream");
    u64 v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) v |= static_cast<u64>(buf[i]) << (8 * i);
    return static_cast<T>(v);
}

template <typename T>
u64 write_vec(std::ostream& out, const std::vector<T>& v) {
    u64 bytes = write_pod<u64>(out, v.size());
    for (T x : v) bytes += write_pod<T>(out, x);
    return bytes;
}

template <typename T>
std::vector<T> read_vec(std::istream& in) {
    u64 sz = read_pod<u64>(in);
    std::vector<T> v(sz);
    for (u64 i = 0; i < sz; ++i) v[i] = read_pod<T>(in);
    return v;
}

// FNV-1a, 64 bit. Used to fingerprint query output streams.
struct fnv1a64 {
    u64 h = 14695981039346656037ull;
    void add(u64 v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    u64 value() const { return h; }
};

}  // namespace augms
