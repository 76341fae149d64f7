// Thresholds between consecutive same-symbol BWT runs, plus the two
// boundary LCE values that make most jump-time LCE queries skippable.
//
// A pair exists for every run with an earlier run of the same head symbol:
// (e_1 = end of the previous run, s_2 = start of this run). Pairs are laid
// out symbol-major, in run order within each symbol; that layout is
// derivable from the RLBWT and is rebuilt on load, never stored.
//
// The threshold t is the rightmost minimum of lcp[e_1+1 .. s_2]. Rightmost
// (not leftmost) matters: the stored side values are flank minima, and a
// tie at t must fall in the e-flank for the boundary cases exercised by
// the tests to exist at all. Any minimum position satisfies the row
// ordering condition the matcher relies on.
#pragma once

#include <optional>

#include "augms/bitvector.hpp"
#include "augms/common.hpp"
#include "augms/dac.hpp"
#include "augms/packed_ints.hpp"
#include "augms/rlbwt.hpp"
#include "augms/suffix.hpp"

namespace augms {

enum class thr_encoding : u8 {
    phoni = 0,   // no threshold LCEs stored at all
    full = 1,    // whole-byte fixed width per value
    byte = 2,    // one byte per value + overflow flags
    bv_full = 3, // used-entry bitvector + fixed width payload
    bv_byte = 4, // used-entry bitvector + byte payload + overflow flags
    dac = 5,     // chunked variable-length codes
    bv_dac = 6,  // used-entry bitvector + chunked codes
};

enum class thr_storage : u8 { array = 0, sigma_bv = 1 };
enum class thr_side : u8 { e = 0, s = 1 };

inline const char* to_string(thr_encoding e) {
    switch (e) {
        case thr_encoding::phoni: return "phoni";
        case thr_encoding::full: return "full";
        case thr_encoding::byte: return "byte";
        case thr_encoding::bv_full: return "bv-full";
        case thr_encoding::bv_byte: return "bv-byte";
        case thr_encoding::dac: return "dac";
        case thr_encoding::bv_dac: return "bv-dac";
    }
    return "?";
}

inline std::optional<thr_encoding> encoding_from_string(const std::string& s) {
    for (u8 v = 0; v <= 6; ++v)
        if (s == to_string(static_cast<thr_encoding>(v))) return static_cast<thr_encoding>(v);
    return std::nullopt;
}

// Whole-byte width covering values below n.
inline u32 full_width_bits(u64 n) { return 8 * static_cast<u32>(div_ceil(bits_for(n), 8)); }

// Symbol-major pair numbering shared by every table below.
struct pair_layout {
    std::array<u64, 257> off{};

    static pair_layout from(const rlbwt& rb) {
        pair_layout l;
        u64 acc = 0;
        for (u32 c = 0; c < 256; ++c) {
            l.off[c] = acc;
            u64 k = rb.symbol_runs(static_cast<u8>(c));
            acc += k ? k - 1 : 0;
        }
        l.off[256] = acc;
        return l;
    }

    u64 pairs() const { return off[256]; }

    // Pair index of run x, or none when x is the first run of its symbol.
    std::optional<u64> index_of_run(const rlbwt& rb, u64 x) const {
        u64 ord = rb.run_ordinal(x);
        if (ord < 2) return std::nullopt;
        return off[rb.head(x)] + ord - 2;
    }
};

// Raw construction output, kept around by tests; the encoded tables are
// what an index stores.
struct thr_raw {
    pair_layout lay;
    std::vector<u64> thr_pos;
    std::vector<u64> lce_e, lce_s;
    std::vector<u8> used_e, used_s;

    u64 pairs() const { return thr_pos.size(); }
};

// One RMQ finds each threshold, two more read off the flank minima.
inline thr_raw build_augmented(suffix_bundle& b, const rlbwt& rb) {
    assert(b.n() == rb.size());
    thr_raw raw;
    raw.lay = pair_layout::from(rb);
    u64 p = raw.lay.pairs();
    raw.thr_pos.assign(p, 0);
    raw.lce_e.assign(p, 0);
    raw.lce_s.assign(p, 0);
    raw.used_e.assign(p, 0);
    raw.used_s.assign(p, 0);

    const argmin_table& am = b.argmins();
    for (u8 c : rb.alphabet()) {
        const auto& runs = rb.runs_of(c);
        for (u64 j = 1; j < runs.size(); ++j) {
            u64 e1 = rb.run_end(runs[j - 1]);
            u64 s2 = rb.run_start(runs[j]);
            assert(e1 + 2 <= s2);  // a gap separates same-symbol runs
            u64 t = am.argmin_right(e1 + 1, s2);
            u64 idx = raw.lay.off[c] + (j - 1);
            raw.thr_pos[idx] = t;
            if (t > e1 + 1) {
                raw.used_e[idx] = 1;
                raw.lce_e[idx] = b.lcp[am.argmin_left(e1 + 1, t - 1)];
            }
            if (t < s2) {
                raw.used_s[idx] = 1;
                raw.lce_s[idx] = b.lcp[am.argmin_left(t + 1, s2)];
            }
        }
    }
    return raw;
}

// Threshold rows, under plain-array or per-symbol bitvector storage.
// Thresholds of one symbol strictly increase, so in bitvector form the
// ordinal-th pair is recovered by select.
class threshold_table {
   public:
    threshold_table() = default;

    static threshold_table build(const thr_raw& raw, const rlbwt& rb, thr_storage storage) {
        threshold_table t;
        t.storage_ = storage;
        t.lay_ = raw.lay;
        t.n_ = rb.size();
        if (storage == thr_storage::array) {
            t.rows_ = packed_ints(raw.pairs(), bits_for(rb.size()));
            for (u64 i = 0; i < raw.pairs(); ++i) t.rows_.set(i, raw.thr_pos[i]);
        } else {
            t.bv_idx_.fill(-1);
            for (u8 c : rb.alphabet()) {
                u64 k = t.lay_.off[c + 1] - t.lay_.off[c];
                if (k == 0) continue;
                bit_vector bv(rb.size());
                for (u64 j = 0; j < k; ++j) {
                    u64 row = raw.thr_pos[t.lay_.off[c] + j];
                    assert(row >= 1 && row <= rb.size());
                    bv.set(row - 1);
                }
                bv.build_rank();
                assert(bv.ones() == k);  // strict monotonicity of rows
                t.bv_idx_[c] = static_cast<int>(t.bvs_.size());
                t.bv_sym_.push_back(c);
                t.bvs_.push_back(std::move(bv));
            }
        }
        return t;
    }

    thr_storage storage() const { return storage_; }

    // Pair index of run x under the shared layout; none when x opens its symbol.
    std::optional<u64> pair_index(const rlbwt& rb, u64 x) const { return lay_.index_of_run(rb, x); }

    // Threshold row for run x; none when x opens its symbol.
    std::optional<u64> lookup(const rlbwt& rb, u64 x) const {
        auto idx = lay_.index_of_run(rb, x);
        if (!idx) return std::nullopt;
        if (storage_ == thr_storage::array) return rows_.get(*idx);
        u8 c = rb.head(x);
        u64 ord = rb.run_ordinal(x);
        return *bvs_[bv_idx_[c]].select1(ord - 1) + 1;
    }

    u64 serialize(std::ostream& out) const {
        u64 bytes = write_pod<u8>(out, static_cast<u8>(storage_));
        if (storage_ == thr_storage::array) {
            bytes += rows_.serialize(out);
        } else {
            bytes += write_pod<u16>(out, static_cast<u16>(bv_sym_.size()));
            for (u64 i = 0; i < bv_sym_.size(); ++i) {
                bytes += write_pod<u8>(out, bv_sym_[i]);
                bytes += bvs_[i].serialize(out);
            }
        }
        return bytes;
    }

    void load(std::istream& in, const rlbwt& rb) {
        lay_ = pair_layout::from(rb);
        n_ = rb.size();
        u8 s = read_pod<u8>(in);
        if (s > 1) throw std::runtime_error("thresholds: unknown storage tag");
        storage_ = static_cast<thr_storage>(s);
        bvs_.clear();
        bv_sym_.clear();
        bv_idx_.fill(-1);
        if (storage_ == thr_storage::array) {
            rows_.load(in);
            if (rows_.size() != lay_.pairs()) throw std::runtime_error("thresholds: pair count mismatch");
        } else {
            u16 cnt = read_pod<u16>(in);
            for (u16 i = 0; i < cnt; ++i) {
                u8 c = read_pod<u8>(in);
                bit_vector bv;
                bv.load(in);
                bv_idx_[c] = static_cast<int>(bvs_.size());
                bv_sym_.push_back(c);
                bvs_.push_back(std::move(bv));
            }
        }
    }

   private:
    thr_storage storage_ = thr_storage::array;
    pair_layout lay_;
    u64 n_ = 0;
    packed_ints rows_;
    std::vector<u8> bv_sym_;
    std::vector<bit_vector> bvs_;
    std::array<int, 256> bv_idx_{};
};

// Threshold LCE values under one of the encodings. Lookup returns the
// exact raw value or nothing; a lossy store must stay silent rather than
// answer wrong, since the matcher trusts a returned value blindly.
class thr_lce_table {
   public:
    thr_lce_table() = default;

    static thr_lce_table encode(const thr_raw& raw, thr_encoding enc, u64 n) {
        thr_lce_table t;
        t.enc_ = enc;
        t.pairs_ = raw.pairs();
        if (enc == thr_encoding::phoni) return t;
        t.e_ = side_store::encode(raw.lce_e, raw.used_e, enc, n);
        t.s_ = side_store::encode(raw.lce_s, raw.used_s, enc, n);
        return t;
    }

    thr_encoding encoding() const { return enc_; }
    u64 pairs() const { return pairs_; }

    std::optional<u64> lookup(u64 pair, thr_side side) const {
        if (enc_ == thr_encoding::phoni) return std::nullopt;
        assert(pair < pairs_);
        return (side == thr_side::e ? e_ : s_).lookup(pair, enc_);
    }

    u64 serialize(std::ostream& out) const {
        u64 bytes = write_pod<u8>(out, static_cast<u8>(enc_));
        bytes += write_pod<u64>(out, pairs_);
        if (enc_ != thr_encoding::phoni) {
            bytes += e_.serialize(out, enc_);
            bytes += s_.serialize(out, enc_);
        }
        return bytes;
    }

    void load(std::istream& in) {
        u8 e = read_pod<u8>(in);
        if (e > 6) throw std::runtime_error("unsupported encoding tag");
        enc_ = static_cast<thr_encoding>(e);
        pairs_ = read_pod<u64>(in);
        if (enc_ != thr_encoding::phoni) {
            e_.load(in, enc_, pairs_);
            s_.load(in, enc_, pairs_);
        }
    }

   private:
    struct side_store {
        packed_ints fixed;      // full, bv-full
        std::vector<u8> bytes;  // byte, bv-byte
        bit_vector ovf;         // byte, bv-byte: value exceeded one byte
        bit_vector used;        // bv variants
        dac_seq chunked;        // dac, bv-dac

        static side_store encode(const std::vector<u64>& vals, const std::vector<u8>& used_flags,
                                 thr_encoding enc, u64 n) {
            side_store s;
            u64 m = vals.size();
            bool bv = enc == thr_encoding::bv_full || enc == thr_encoding::bv_byte || enc == thr_encoding::bv_dac;

            std::vector<u64> payload;
            if (bv) {
                s.used = bit_vector(m);
                for (u64 i = 0; i < m; ++i)
                    if (used_flags[i]) {
                        s.used.set(i);
                        payload.push_back(vals[i]);
                    }
                s.used.build_rank();
            } else {
                payload = vals;
            }

            switch (enc) {
                case thr_encoding::full:
                case thr_encoding::bv_full: {
                    s.fixed = packed_ints(payload.size(), full_width_bits(n));
                    for (u64 i = 0; i < payload.size(); ++i) s.fixed.set(i, payload[i]);
                    break;
                }
                case thr_encoding::byte:
                case thr_encoding::bv_byte: {
                    s.ovf = bit_vector(payload.size());
                    for (u64 i = 0; i < payload.size(); ++i) {
                        s.bytes.push_back(static_cast<u8>(std::min<u64>(payload[i], 255)));
                        if (payload[i] > 255) s.ovf.set(i);
                    }
                    s.ovf.build_rank();
                    break;
                }
                case thr_encoding::dac:
                case thr_encoding::bv_dac:
                    s.chunked = dac_seq(payload, full_width_bits(n));
                    break;
                default:
                    break;
            }
            return s;
        }

        std::optional<u64> lookup(u64 i, thr_encoding enc) const {
            bool bv = enc == thr_encoding::bv_full || enc == thr_encoding::bv_byte || enc == thr_encoding::bv_dac;
            if (bv) {
                if (!used.get(i)) return std::nullopt;
                i = used.rank1(i);
            }
            switch (enc) {
                case thr_encoding::full:
                case thr_encoding::bv_full:
                    return fixed.get(i);
                case thr_encoding::byte:
                case thr_encoding::bv_byte:
                    if (ovf.get(i)) return std::nullopt;
                    return bytes[i];
                case thr_encoding::dac:
                case thr_encoding::bv_dac:
                    return chunked.get(i);
                default:
                    return std::nullopt;
            }
        }

        u64 serialize(std::ostream& out, thr_encoding enc) const {
            u64 b = 0;
            bool bv = enc == thr_encoding::bv_full || enc == thr_encoding::bv_byte || enc == thr_encoding::bv_dac;
            if (bv) b += used.serialize(out);
            switch (enc) {
                case thr_encoding::full:
                case thr_encoding::bv_full:
                    b += fixed.serialize(out);
                    break;
                case thr_encoding::byte:
                case thr_encoding::bv_byte:
                    b += write_vec<u8>(out, bytes);
                    b += ovf.serialize(out);
                    break;
                case thr_encoding::dac:
                case thr_encoding::bv_dac:
                    b += chunked.serialize(out);
                    break;
                default:
                    break;
            }
            return b;
        }

        void load(std::istream& in, thr_encoding enc, u64 pairs) {
            bool bv = enc == thr_encoding::bv_full || enc == thr_encoding::bv_byte || enc == thr_encoding::bv_dac;
            u64 m = pairs;
            if (bv) {
                used.load(in);
                if (used.size() != pairs) throw std::runtime_error("threshold lce: used flags size mismatch");
                m = used.ones();
            }
            switch (enc) {
                case thr_encoding::full:
                case thr_encoding::bv_full:
                    fixed.load(in);
                    if (fixed.size() != m) throw std::runtime_error("threshold lce: payload size mismatch");
                    break;
                case thr_encoding::byte:
                case thr_encoding::bv_byte:
                    bytes = read_vec<u8>(in);
                    ovf.load(in);
                    if (bytes.size() != m || ovf.size() != m) throw std::runtime_error("threshold lce: payload size mismatch");
                    break;
                case thr_encoding::dac:
                case thr_encoding::bv_dac:
                    chunked.load(in);
                    if (chunked.size() != m) throw std::runtime_error("threshold lce: payload size mismatch");
                    break;
                default:
                    break;
            }
        }
    };

    thr_encoding enc_ = thr_encoding::phoni;
    u64 pairs_ = 0;
    side_store e_, s_;
};

}  // namespace augms
