// Fixed-width packed integer array (widths 1..64).
#pragma once

#include "augms/common.hpp"

namespace augms {

class packed_ints {
   public:
    packed_ints() = default;
    packed_ints(u64 n, u32 width)
        : n_(n), width_(width), words_(div_ceil(n * width + 1, 64), 0) {
        assert(width >= 1 && width <= 64);
    }

    void set(u64 i, u64 v) {
        assert(i < n_);
        assert(width_ == 64 || v < (u64(1) << width_));
        u64 bit = i * width_;
        u64 w = bit >> 6, off = bit & 63;
        words_[w] &= ~(mask() << off);
        words_[w] |= v << off;
        if (off + width_ > 64) {
            u64 hi = width_ - (64 - off);
            words_[w + 1] &= ~((mask() >> (width_ - hi)));
            words_[w + 1] |= v >> (64 - off);
        }
    }

    u64 get(u64 i) const {
        assert(i < n_);
        u64 bit = i * width_;
        u64 w = bit >> 6, off = bit & 63;
        u64 v = words_[w] >> off;
        if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
        return v & mask();
    }

    u64 size() const { return n_; }
    u32 width() const { return width_; }

    u64 serialize(std::ostream& out) const {
        u64 bytes = write_pod<u64>(out, n_);
        bytes += write_pod<u32>(out, width_);
        bytes += write_vec<u64>(out, words_);
        return bytes;
    }

    void load(std::istream& in) {
        n_ = read_pod<u64>(in);
        width_ = read_pod<u32>(in);
        if (width_ < 1 || width_ > 64) throw std::runtime_error("packed_ints: bad width");
        words_ = read_vec<u64>(in);
        if (words_.size() != div_ceil(n_ * width_ + 1, 64)) throw std::runtime_error("packed_ints: word count mismatch");
    }

    bool operator==(const packed_ints& o) const = default;

   private:
    u64 mask() const { return width_ == 64 ? ~u64(0) : (u64(1) << width_) - 1; }

    u64 n_ = 0;
    u32 width_ = 1;
    std::vector<u64> words_;
};

}  // namespace augms
