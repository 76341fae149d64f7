// Plain bitvector with rank/select. Payload is a word array; the rank
// directory is rebuilt after construction or load, never serialized.
#pragma once

#include <bit>
#include <optional>

#include "augms/common.hpp"

namespace augms {

class bit_vector {
   public:
    bit_vector() = default;
    explicit bit_vector(u64 n) : n_(n), words_(div_ceil(n ? n : 1, 64), 0) {}

    void set(u64 i) {
        assert(i < n_);
        words_[i >> 6] |= u64(1) << (i & 63);
    }

    bool get(u64 i) const {
        assert(i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    u64 size() const { return n_; }
    u64 ones() const { return total_ones_; }

    // Call once after the last set(); rank/select are invalid before.
    void build_rank() {
        u64 nw = words_.size();
        super_.assign(div_ceil(nw, WORDS_PER_SUPER) + 1, 0);
        block_.assign(nw, 0);
        u64 acc = 0;
        for (u64 w = 0; w < nw; ++w) {
            if (w % WORDS_PER_SUPER == 0) super_[w / WORDS_PER_SUPER] = acc;
            block_[w] = static_cast<u16>(acc - super_[w / WORDS_PER_SUPER]);
            acc += std::popcount(words_[w]);
        }
        super_[div_ceil(nw, WORDS_PER_SUPER)] = acc;
        total_ones_ = acc;
    }

    // Ones strictly before position i, 0 <= i <= size().
    u64 rank1(u64 i) const {
        assert(i <= n_);
        u64 w = i >> 6;
        if (w == words_.size()) return total_ones_;
        u64 res = super_[w / WORDS_PER_SUPER] + block_[w];
        u64 tail = i & 63;
        if (tail) res += std::popcount(words_[w] & ((u64(1) << tail) - 1));
        return res;
    }

    // Position of the k-th one, k >= 1.
    std::optional<u64> select1(u64 k) const {
        if (k == 0 || k > total_ones_) return std::nullopt;
        // Superblock, then word, then bit.
        u64 lo = 0, hi = super_.size() - 1;
        while (lo + 1 < hi) {
            u64 mid = (lo + hi) / 2;
            if (super_[mid] < k) lo = mid; else hi = mid;
        }
        u64 w = lo * WORDS_PER_SUPER;
        u64 seen = super_[lo];
        u64 last = std::min<u64>(words_.size(), (lo + 1) * WORDS_PER_SUPER);
        while (w < last) {
            u64 pc = std::popcount(words_[w]);
            if (seen + pc >= k) break;
            seen += pc;
            ++w;
        }
        u64 word = words_[w];
        u64 need = k - seen;
        for (u64 b = 0;; ++b) {
            if ((word >> b) & 1) {
                if (--need == 0) return w * 64 + b;
            }
        }
    }

    u64 serialize(std::ostream& out) const {
        u64 bytes = write_pod<u64>(out, n_);
        bytes += write_vec<u64>(out, words_);
        return bytes;
    }

    void load(std::istream& in) {
        n_ = read_pod<u64>(in);
        words_ = read_vec<u64>(in);
        if (words_.size() != div_ceil(n_ ? n_ : 1, 64)) throw std::runtime_error("bitvector: word count mismatch");
        build_rank();
    }

    bool operator==(const bit_vector& o) const { return n_ == o.n_ && words_ == o.words_; }

   private:
    static constexpr u64 WORDS_PER_SUPER = 8;  // 512-bit superblocks

    u64 n_ = 0;
    std::vector<u64> words_;
    std::vector<u64> super_;   // ones before each superblock
    std::vector<u16> block_;   // ones before each word, within its superblock
    u64 total_ones_ = 0;
};

}  // namespace augms
