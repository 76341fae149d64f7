// Indexed text. Positions are 1-based: bytes[1..n], where bytes[n] is the
// sentinel 0x00, strictly smaller than every other symbol and unique.
#pragma once

#include <array>

#include "augms/common.hpp"

namespace augms {

inline constexpr u8 SENTINEL = 0x00;
// Separates concatenated records so matches cannot span them.
inline constexpr u8 RECORD_SEP = 0x01;

class text {
   public:
    // Appends the sentinel. Raw content must be non-empty and sentinel-free.
    static text build(std::vector<u8> raw) {
        if (raw.empty()) throw std::runtime_error("empty text");
        for (u8 b : raw)
            if (b == SENTINEL) throw std::runtime_error("text contains the reserved sentinel byte");
        text t;
        t.bytes_.reserve(raw.size() + 2);
        t.bytes_.push_back(0);  // slot 0 unused
        t.bytes_.insert(t.bytes_.end(), raw.begin(), raw.end());
        t.bytes_.push_back(SENTINEL);
        return t;
    }

    static text build(const std::string& raw) {
        return build(std::vector<u8>(raw.begin(), raw.end()));
    }

    u64 size() const { return bytes_.size() - 1; }  // n, sentinel included

    u8 operator[](u64 i) const {
        assert(i >= 1 && i <= size());
        return bytes_[i];
    }

    const u8* data1() const { return bytes_.data() + 1; }  // &T[1]

    // Distinct symbols present, sentinel included.
    std::vector<u8> alphabet() const {
        std::array<bool, 256> seen{};
        for (u64 i = 1; i <= size(); ++i) seen[bytes_[i]] = true;
        std::vector<u8> a;
        for (u32 c = 0; c < 256; ++c)
            if (seen[c]) a.push_back(static_cast<u8>(c));
        return a;
    }

    bool operator==(const text& o) const = default;

   private:
    std::vector<u8> bytes_;
};

}  // namespace augms
