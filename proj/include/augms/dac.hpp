// Directly addressable chunked codes. Each level stores a fixed-width
// chunk plus a continuation bit; values still unfinished after the last
// level escape to a side table indexed by rank over the last bitvector.
#pragma once

#include "augms/bitvector.hpp"
#include "augms/common.hpp"
#include "augms/packed_ints.hpp"

namespace augms {

// Encode-time parameters. Decode honors whatever a file declares.
inline constexpr u32 DAC_CHUNK_BITS = 4;
inline constexpr u32 DAC_LEVELS = 2;

class dac_seq {
   public:
    dac_seq() = default;

    // ovf_bits: width of the escape table entries; widened if values demand it.
    dac_seq(const std::vector<u64>& vals, u32 ovf_bits) {
        n_ = vals.size();
        chunk_bits_ = DAC_CHUNK_BITS;
        levels_ = DAC_LEVELS;
        u64 chunk_mask = (u64(1) << chunk_bits_) - 1;

        std::vector<std::vector<u64>> lvl_chunks(levels_);
        std::vector<std::vector<bool>> lvl_cont(levels_);
        std::vector<u64> ovf_vals;
        std::vector<u64> cur(vals);
        for (u32 l = 0; l < levels_; ++l) {
            std::vector<u64> next;
            for (u64 v : cur) {
                lvl_chunks[l].push_back(v & chunk_mask);
                bool more = (v >> chunk_bits_) != 0;
                lvl_cont[l].push_back(more);
                if (more) next.push_back(v >> chunk_bits_);
            }
            cur = std::move(next);
        }
        // Escaped values are stored whole, not by their remaining chunks.
        for (u64 v : vals)
            if ((v >> (chunk_bits_ * levels_)) != 0) ovf_vals.push_back(v);
        u32 w = ovf_bits;
        for (u64 v : ovf_vals) w = std::max(w, bits_for(v));
        ovf_width_ = static_cast<u8>(w);

        chunks_.clear();
        cont_.clear();
        for (u32 l = 0; l < levels_; ++l) {
            u64 m = lvl_chunks[l].size();
            chunks_.emplace_back(m, chunk_bits_);
            cont_.emplace_back(m);
            for (u64 i = 0; i < m; ++i) {
                chunks_[l].set(i, lvl_chunks[l][i]);
                if (lvl_cont[l][i]) cont_[l].set(i);
            }
            cont_[l].build_rank();
        }
        ovf_ = packed_ints(ovf_vals.size(), ovf_width_);
        for (u64 i = 0; i < ovf_vals.size(); ++i) ovf_.set(i, ovf_vals[i]);
    }

    u64 size() const { return n_; }

    u64 get(u64 i) const {
        assert(i < n_);
        u64 idx = i, v = 0;
        u32 shift = 0;
        for (u32 l = 0; l < levels_; ++l) {
            v |= chunks_[l].get(idx) << shift;
            if (!cont_[l].get(idx)) return v;
            idx = cont_[l].rank1(idx);
            shift += chunk_bits_;
        }
        return ovf_.get(idx);
    }

    u64 serialize(std::ostream& out) const {
        u64 bytes = write_pod<u64>(out, n_);
        bytes += write_pod<u8>(out, chunk_bits_);
        bytes += write_pod<u8>(out, levels_);
        bytes += write_pod<u8>(out, ovf_width_);
        for (u32 l = 0; l < levels_; ++l) {
            bytes += chunks_[l].serialize(out);
            bytes += cont_[l].serialize(out);
        }
        bytes += ovf_.serialize(out);
        return bytes;
    }

    void load(std::istream& in) {
        n_ = read_pod<u64>(in);
        chunk_bits_ = read_pod<u8>(in);
        levels_ = read_pod<u8>(in);
        ovf_width_ = read_pod<u8>(in);
        if (chunk_bits_ < 1 || chunk_bits_ > 16 || levels_ < 1 || levels_ > 8)
            throw std::runtime_error("dac: bad parameters");
        chunks_.assign(levels_, {});
        cont_.assign(levels_, {});
        for (u32 l = 0; l < levels_; ++l) {
            chunks_[l].load(in);
            cont_[l].load(in);
            if (chunks_[l].size() != cont_[l].size()) throw std::runtime_error("dac: level size mismatch");
        }
        ovf_.load(in);
        if (!chunks_.empty() && chunks_[0].size() != n_) throw std::runtime_error("dac: size mismatch");
    }

    bool operator==(const dac_seq& o) const {
        return n_ == o.n_ && chunk_bits_ == o.chunk_bits_ && levels_ == o.levels_ &&
               chunks_ == o.chunks_ && cont_ == o.cont_ && ovf_ == o.ovf_;
    }

   private:
    u64 n_ = 0;
    u8 chunk_bits_ = DAC_CHUNK_BITS;
    u8 levels_ = DAC_LEVELS;
    u8 ovf_width_ = 8;
    std::vector<packed_ints> chunks_;
    std::vector<bit_vector> cont_;
    packed_ints ovf_;
};

}  // namespace augms
