// Longest common extension between two suffixes, by text position.
// Two backends: naive keeps the text and scans; lcp-rmq keeps isa + lcp
// and answers through a range-minimum table (rebuilt on load).
// Every counted query goes through lce(); verify paths use lce_nocount().
#pragma once

#include "augms/common.hpp"
#include "augms/packed_ints.hpp"
#include "augms/rmq.hpp"
#include "augms/stats.hpp"
#include "augms/suffix.hpp"

namespace augms {

enum class lce_kind : u8 { naive = 0, lcp_rmq = 1 };

class lce_backend {
   public:
    lce_backend() = default;

    static lce_backend make_naive(const suffix_bundle& b) {
        lce_backend l;
        l.kind_ = lce_kind::naive;
        l.n_ = b.n();
        l.text_.assign(1, 0);
        for (u64 i = 1; i <= l.n_; ++i) l.text_.push_back(b.txt[i]);
        return l;
    }

    static lce_backend make_lcp_rmq(const suffix_bundle& b) {
        lce_backend l;
        l.kind_ = lce_kind::lcp_rmq;
        l.n_ = b.n();
        l.isa_ = b.isa;
        l.lcp_ = b.lcp;
        l.mt_.build(l.lcp_);
        return l;
    }

    lce_kind kind() const { return kind_; }
    u64 size() const { return n_; }

    u64 lce(u64 i, u64 j, query_stats& st) const {
        ++st.lce_calls;
        return lce_nocount(i, j);
    }

    u64 lce_nocount(u64 i, u64 j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("lce: bad position");
        if (i == j) return n_ - i + 1;
        if (kind_ == lce_kind::naive) {
            u64 h = 0;
            while (i + h <= n_ && j + h <= n_ && text_[i + h] == text_[j + h]) ++h;
            return h;
        }
        u64 a = isa_[i], b = isa_[j];
        if (a > b) std::swap(a, b);
        return mt_.min(a + 1, b);
    }

    u64 serialize(std::ostream& out) const {
        u64 bytes = write_pod<u8>(out, static_cast<u8>(kind_));
        bytes += write_pod<u64>(out, n_);
        if (kind_ == lce_kind::naive) {
            out.write(reinterpret_cast<const char*>(text_.data() + 1), n_);
            bytes += n_;
        } else {
            u32 w = bits_for(n_);
            packed_ints pisa(n_, w), plcp(n_, w);
            for (u64 i = 1; i <= n_; ++i) {
                pisa.set(i - 1, isa_[i]);
                plcp.set(i - 1, lcp_[i]);
            }
            bytes += pisa.serialize(out);
            bytes += plcp.serialize(out);
        }
        return bytes;
    }

    void load(std::istream& in) {
        u8 k = read_pod<u8>(in);
        if (k > 1) throw std::runtime_error("lce backend: unknown kind tag");
        kind_ = static_cast<lce_kind>(k);
        n_ = read_pod<u64>(in);
        text_.clear();
        isa_.clear();
        lcp_.clear();
        if (kind_ == lce_kind::naive) {
            text_.assign(n_ + 1, 0);
            in.read(reinterpret_cast<char*>(text_.data() + 1), n_);
            if (!in) throw std::runtime_error("lce backend: truncated text");
        } else {
            packed_ints pisa, plcp;
            pisa.load(in);
            plcp.load(in);
            if (pisa.size() != n_ || plcp.size() != n_) throw std::runtime_error("lce backend: bad array sizes");
            isa_.assign(n_ + 1, 0);
            lcp_.assign(n_ + 1, 0);
            for (u64 i = 1; i <= n_; ++i) {
                isa_[i] = static_cast<u32>(pisa.get(i - 1));
                lcp_[i] = static_cast<u32>(plcp.get(i - 1));
            }
            mt_.build(lcp_);
        }
    }

   private:
    lce_kind kind_ = lce_kind::naive;
    u64 n_ = 0;
    std::vector<u8> text_;   // naive, 1-based
    std::vector<u32> isa_;   // lcp-rmq, 1-based
    std::vector<u32> lcp_;
    min_table mt_;
};

}  // namespace augms
