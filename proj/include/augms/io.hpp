// Index file format, version 1. Little-endian throughout.
//
//   magic "AUGMSIDX" | version u8 | encoding u8 | storage u8 | lce u8
//   n u64 | r u64 | sigma u8 | alphabet bytes
//   sections, in order: rlbwt, thresholds, threshold-lce (absent for
//   phoni), lce backend. Each section: id u8 | payload length u64 |
//   payload | crc32 u32 (zlib polynomial, over the payload).
//
// Reported section sizes include the 13 framing bytes, so header size
// plus section sizes equals the file size.
#pragma once

#include <fstream>
#include <sstream>

#include <zlib.h>

#include "augms/index.hpp"

namespace augms {

inline constexpr char INDEX_MAGIC[8] = {'A', 'U', 'G', 'M', 'S', 'I', 'D', 'X'};
inline constexpr u8 INDEX_VERSION = 1;

enum class section_id : u8 { rlbwt = 1, thresholds = 2, thr_lce = 3, lce = 4 };

struct index_sections {
    u64 header = 0;
    u64 rlbwt = 0;
    u64 thresholds = 0;
    u64 thr_lce = 0;  // zero when absent
    u64 lce = 0;

    u64 total() const { return header + rlbwt + thresholds + thr_lce + lce; }
};

namespace detail {

inline u32 crc_of(const std::string& payload) {
    uLong crc = crc32(0L, Z_NULL, 0);
    size_t off = 0;
    while (off < payload.size()) {
        uInt chunk = static_cast<uInt>(std::min<size_t>(payload.size() - off, 1u << 30));
        crc = crc32(crc, reinterpret_cast<const Bytef*>(payload.data() + off), chunk);
        off += chunk;
    }
    return static_cast<u32>(crc);
}

template <typename F>
u64 write_section(std::ostream& out, section_id id, F&& emit) {
    std::ostringstream buf(std::ios::binary);
    emit(buf);
    std::string payload = std::move(buf).str();
    u64 bytes = write_pod<u8>(out, static_cast<u8>(id));
    bytes += write_pod<u64>(out, payload.size());
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    bytes += payload.size();
    bytes += write_pod<u32>(out, crc_of(payload));
    return bytes;
}

inline std::string read_section(std::istream& in, section_id want) {
    u8 id = read_pod<u8>(in);
    if (id != static_cast<u8>(want)) throw std::runtime_error("index file: unexpected section id");
    u64 len = read_pod<u64>(in);
    std::string payload(len, '\0');
    in.read(payload.data(), static_cast<std::streamsize>(len));
    if (!in) throw std::runtime_error("index file: truncated section");
    u32 crc = read_pod<u32>(in);
    if (crc != crc_of(payload)) throw std::runtime_error("index file: checksum mismatch");
    return payload;
}

}  // namespace detail

inline u64 save_index(const ms_index& ix, std::ostream& out, index_sections* sizes = nullptr) {
    index_sections sz;
    out.write(INDEX_MAGIC, 8);
    sz.header = 8;
    sz.header += write_pod<u8>(out, INDEX_VERSION);
    sz.header += write_pod<u8>(out, static_cast<u8>(ix.tlce.encoding()));
    sz.header += write_pod<u8>(out, static_cast<u8>(ix.thr.storage()));
    sz.header += write_pod<u8>(out, static_cast<u8>(ix.lce.kind()));
    sz.header += write_pod<u64>(out, ix.n());
    sz.header += write_pod<u64>(out, ix.r());
    auto alpha = ix.rb.alphabet();
    sz.header += write_pod<u8>(out, static_cast<u8>(alpha.size()));
    out.write(reinterpret_cast<const char*>(alpha.data()), static_cast<std::streamsize>(alpha.size()));
    sz.header += alpha.size();

    sz.rlbwt = detail::write_section(out, section_id::rlbwt, [&](std::ostream& o) { ix.rb.serialize(o); });
    sz.thresholds =
        detail::write_section(out, section_id::thresholds, [&](std::ostream& o) { ix.thr.serialize(o); });
    if (ix.tlce.encoding() != thr_encoding::phoni)
        sz.thr_lce =
            detail::write_section(out, section_id::thr_lce, [&](std::ostream& o) { ix.tlce.serialize(o); });
    sz.lce = detail::write_section(out, section_id::lce, [&](std::ostream& o) { ix.lce.serialize(o); });

    if (!out) throw std::runtime_error("index file: write failed");
    if (sizes) *sizes = sz;
    return sz.total();
}

inline u64 save_index(const ms_index& ix, const std::string& path, index_sections* sizes = nullptr) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    return save_index(ix, f, sizes);
}

inline ms_index load_index(std::istream& in, index_sections* sizes = nullptr) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, INDEX_MAGIC, 8) != 0) throw std::runtime_error("index file: bad magic");
    u8 version = read_pod<u8>(in);
    if (version != INDEX_VERSION) throw std::runtime_error("index file: unsupported version");
    u8 enc = read_pod<u8>(in);
    if (enc > 6) throw std::runtime_error("index file: unsupported encoding tag");
    u8 storage = read_pod<u8>(in);
    if (storage > 1) throw std::runtime_error("index file: unsupported threshold storage tag");
    u8 lk = read_pod<u8>(in);
    if (lk > 1) throw std::runtime_error("index file: unsupported lce backend tag");
    u64 n = read_pod<u64>(in);
    u64 r = read_pod<u64>(in);
    u8 sigma = read_pod<u8>(in);
    std::vector<u8> alpha(sigma);
    in.read(reinterpret_cast<char*>(alpha.data()), sigma);
    if (!in) throw std::runtime_error("index file: truncated header");
    index_sections sz;
    sz.header = 8 + 3 + 1 + 16 + 1 + sigma;

    ms_index ix;
    {
        std::string p = detail::read_section(in, section_id::rlbwt);
        sz.rlbwt = p.size() + 13;
        std::istringstream s(p, std::ios::binary);
        ix.rb.load(s);
    }
    if (ix.n() != n || ix.r() != r) throw std::runtime_error("index file: header disagrees with contents");
    {
        std::string p = detail::read_section(in, section_id::thresholds);
        sz.thresholds = p.size() + 13;
        std::istringstream s(p, std::ios::binary);
        ix.thr.load(s, ix.rb);
    }
    if (static_cast<thr_encoding>(enc) != thr_encoding::phoni) {
        std::string p = detail::read_section(in, section_id::thr_lce);
        sz.thr_lce = p.size() + 13;
        std::istringstream s(p, std::ios::binary);
        ix.tlce.load(s);
        if (ix.tlce.encoding() != static_cast<thr_encoding>(enc))
            throw std::runtime_error("index file: encoding tag disagrees with contents");
    } else {
        ix.tlce = thr_lce_table();
    }
    {
        std::string p = detail::read_section(in, section_id::lce);
        sz.lce = p.size() + 13;
        std::istringstream s(p, std::ios::binary);
        ix.lce.load(s);
        if (ix.lce.kind() != static_cast<lce_kind>(lk))
            throw std::runtime_error("index file: lce tag disagrees with contents");
    }
    if (ix.thr.storage() != static_cast<thr_storage>(storage))
        throw std::runtime_error("index file: storage tag disagrees with contents");
    if (sizes) *sizes = sz;
    return ix;
}

inline ms_index load_index(const std::string& path, index_sections* sizes = nullptr) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    return load_index(f, sizes);
}

}  // namespace augms
