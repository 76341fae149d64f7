// Run-length BWT: run heads and boundaries, per-symbol occurrence
// geometry for rank/select, LF, and SA samples at run boundaries.
// Everything except heads, boundaries, and samples is rebuilt on load.
#pragma once

#include <algorithm>
#include <array>
#include <optional>

#include "augms/common.hpp"
#include "augms/packed_ints.hpp"
#include "augms/suffix.hpp"

namespace augms {

enum class run_side { start, end };

class rlbwt {
   public:
    rlbwt() = default;

    static rlbwt from_bundle(const suffix_bundle& b) {
        rlbwt rb;
        u64 n = b.n();
        rb.n_ = n;
        rb.heads_.push_back(0);
        rb.starts_.push_back(0);
        for (u64 j = 1; j <= n; ++j) {
            if (j == 1 || b.bwt[j] != b.bwt[j - 1]) {
                rb.heads_.push_back(b.bwt[j]);
                rb.starts_.push_back(j);
            }
        }
        rb.r_ = rb.heads_.size() - 1;
        rb.starts_.push_back(n + 1);

        u32 w = bits_for(n);
        rb.sa_start_ = packed_ints(rb.r_, w);
        rb.sa_end_ = packed_ints(rb.r_, w);
        for (u64 x = 1; x <= rb.r_; ++x) {
            rb.sa_start_.set(x - 1, b.sa[rb.starts_[x]]);
            rb.sa_end_.set(x - 1, b.sa[rb.starts_[x + 1] - 1]);
        }
        rb.finish();
        return rb;
    }

    u64 size() const { return n_; }
    u64 runs() const { return r_; }

    u8 head(u64 x) const {
        assert(x >= 1 && x <= r_);
        return heads_[x];
    }

    u64 run_start(u64 x) const {
        assert(x >= 1 && x <= r_);
        return starts_[x];
    }

    u64 run_end(u64 x) const {
        assert(x >= 1 && x <= r_);
        return starts_[x + 1] - 1;
    }

    u64 run_of_position(u64 j) const {
        if (j < 1 || j > n_) throw std::out_of_range("run_of_position: bad position");
        auto it = std::upper_bound(starts_.begin() + 1, starts_.begin() + r_ + 1, j);
        return static_cast<u64>(it - starts_.begin()) - 1;
    }

    // Ordinal of run x among the runs of its head symbol, 1-based.
    u64 run_ordinal(u64 x) const {
        assert(x >= 1 && x <= r_);
        return run_ord_[x];
    }

    u64 symbol_count(u8 c) const { return cum_[c].back(); }
    u64 symbol_runs(u8 c) const { return runs_of_[c].size(); }
    const std::vector<u32>& runs_of(u8 c) const { return runs_of_[c]; }

    // Occurrences of c strictly before position j.
    u64 rank(u8 c, u64 j) const {
        if (j < 1 || j > n_) throw std::out_of_range("rank: bad position");
        const auto& rs = runs_of_[c];
        // Runs of c starting before j.
        u64 lo = 0, hi = rs.size();
        while (lo < hi) {
            u64 mid = (lo + hi) / 2;
            if (starts_[rs[mid]] < j) lo = mid + 1; else hi = mid;
        }
        if (lo == 0) return 0;
        u64 x = rs[lo - 1];
        u64 len = starts_[x + 1] - starts_[x];
        return cum_[c][lo - 1] + std::min<u64>(j - starts_[x], len);
    }

    // Position of the k-th occurrence of c, k >= 1.
    std::optional<u64> select(u8 c, u64 k) const {
        const auto& cm = cum_[c];
        if (k == 0 || k > cm.back()) return std::nullopt;
        u64 j = static_cast<u64>(std::lower_bound(cm.begin() + 1, cm.end(), k) - cm.begin());
        u64 x = runs_of_[c][j - 1];
        return starts_[x] + (k - cm[j - 1] - 1);
    }

    u8 bwt_at(u64 j) const { return heads_[run_of_position(j)]; }

    u64 lf(u64 j) const {
        u8 c = bwt_at(j);
        return C_[c] + rank(c, j) + 1;
    }

    // LF of the k-th occurrence of c: rank there is k-1 by definition.
    u64 lf_at_occ(u8 c, u64 k) const { return C_[c] + k; }

    // LF of position j known to lie in run x; skips the symbol search.
    u64 lf_in_run(u64 x, u64 j) const {
        assert(j >= starts_[x] && j < starts_[x + 1]);
        u8 c = heads_[x];
        return C_[c] + cum_[c][run_ord_[x] - 1] + (j - starts_[x]) + 1;
    }

    u64 sa_sample(u64 x, run_side side) const {
        if (x < 1 || x > r_) throw std::out_of_range("sa_sample: bad run");
        return side == run_side::start ? sa_start_.get(x - 1) : sa_end_.get(x - 1);
    }

    std::vector<u8> alphabet() const {
        std::vector<u8> a;
        for (u32 c = 0; c < 256; ++c)
            if (!runs_of_[c].empty()) a.push_back(static_cast<u8>(c));
        return a;
    }

    u64 serialize(std::ostream& out) const {
        u64 bytes = write_pod<u64>(out, n_);
        bytes += write_pod<u64>(out, r_);
        out.write(reinterpret_cast<const char*>(heads_.data() + 1), r_);
        bytes += r_;
        packed_ints st(r_, bits_for(n_ + 1));
        for (u64 x = 1; x <= r_; ++x) st.set(x - 1, starts_[x]);
        bytes += st.serialize(out);
        bytes += sa_start_.serialize(out);
        bytes += sa_end_.serialize(out);
        return bytes;
    }

    void load(std::istream& in) {
        n_ = read_pod<u64>(in);
        r_ = read_pod<u64>(in);
        if (r_ == 0 || r_ > n_) throw std::runtime_error("rlbwt: bad run count");
        heads_.assign(1, 0);
        heads_.resize(r_ + 1);
        in.read(reinterpret_cast<char*>(heads_.data() + 1), r_);
        if (!in) throw std::runtime_error("rlbwt: truncated heads");
        packed_ints st;
        st.load(in);
        if (st.size() != r_) throw std::runtime_error("rlbwt: bad starts");
        starts_.assign(1, 0);
        for (u64 x = 1; x <= r_; ++x) starts_.push_back(st.get(x - 1));
        starts_.push_back(n_ + 1);
        sa_start_.load(in);
        sa_end_.load(in);
        if (sa_start_.size() != r_ || sa_end_.size() != r_) throw std::runtime_error("rlbwt: bad samples");
        if (starts_[1] != 1) throw std::runtime_error("rlbwt: bad first run");
        for (u64 x = 1; x <= r_; ++x)
            if (starts_[x] >= starts_[x + 1]) throw std::runtime_error("rlbwt: runs not increasing");
        finish();
    }

    bool operator==(const rlbwt& o) const {
        return n_ == o.n_ && r_ == o.r_ && heads_ == o.heads_ && starts_ == o.starts_ &&
               sa_start_ == o.sa_start_ && sa_end_ == o.sa_end_;
    }

   private:
    // Derives per-symbol geometry and C from heads/starts.
    void finish() {
        run_ord_.assign(r_ + 1, 0);
        for (u32 c = 0; c < 256; ++c) {
            runs_of_[c].clear();
            cum_[c].assign(1, 0);
        }
        for (u64 x = 1; x <= r_; ++x) {
            u8 c = heads_[x];
            runs_of_[c].push_back(static_cast<u32>(x));
            cum_[c].push_back(cum_[c].back() + (starts_[x + 1] - starts_[x]));
            run_ord_[x] = static_cast<u32>(runs_of_[c].size());
        }
        u64 acc = 0;
        for (u32 c = 0; c < 256; ++c) {
            C_[c] = acc;
            acc += cum_[c].back();
        }
        C_[256] = acc;
        assert(acc == n_);
    }

    u64 n_ = 0;
    u64 r_ = 0;
    std::vector<u8> heads_;
    std::vector<u64> starts_;
    packed_ints sa_start_, sa_end_;

    // Derived:
    std::array<std::vector<u32>, 256> runs_of_;
    std::array<std::vector<u64>, 256> cum_;
    std::vector<u32> run_ord_;
    std::array<u64, 257> C_{};
};

}  // namespace augms
