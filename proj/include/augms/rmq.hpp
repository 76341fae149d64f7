// Sparse-table range minimum structures over a 1-based u32 array
// (slot 0 unused). 32-bit cells keep the tables affordable at scale;
// callers assert n < 2^32.
#pragma once

#include "augms/common.hpp"

namespace augms {

// Values only: O(1) min over an inclusive range. Query-time structure.
class min_table {
   public:
    min_table() = default;

    explicit min_table(const std::vector<u32>& v) { build(v); }

    void build(const std::vector<u32>& v) {
        assert(!v.empty());
        n_ = v.size() - 1;
        u32 levels = n_ ? bits_for(n_) : 1;
        tab_.assign(levels, {});
        tab_[0].assign(v.begin(), v.end());
        for (u32 k = 1; k < levels; ++k) {
            u64 span = u64(1) << k;
            tab_[k].assign(n_ + 1, 0);
            for (u64 i = 1; i + span - 1 <= n_; ++i)
                tab_[k][i] = std::min(tab_[k - 1][i], tab_[k - 1][i + span / 2]);
        }
    }

    bool empty() const { return tab_.empty(); }

    u32 min(u64 l, u64 r) const {
        assert(l >= 1 && l <= r && r <= n_);
        u32 k = bits_for(r - l + 1) - 1;
        return std::min(tab_[k][l], tab_[k][r - (u64(1) << k) + 1]);
    }

   private:
    u64 n_ = 0;
    std::vector<std::vector<u32>> tab_;
};

// Positions of minima, leftmost and rightmost. Construction-time only;
// keeps a pointer into the caller's array, which must outlive queries.
class argmin_table {
   public:
    explicit argmin_table(const std::vector<u32>& v) : v_(&v) {
        assert(!v.empty());
        n_ = v.size() - 1;
        u32 levels = n_ ? bits_for(n_) : 1;
        left_.assign(levels, {});
        right_.assign(levels, {});
        left_[0].resize(n_ + 1);
        right_[0].resize(n_ + 1);
        for (u64 i = 0; i <= n_; ++i) left_[0][i] = right_[0][i] = static_cast<u32>(i);
        for (u32 k = 1; k < levels; ++k) {
            u64 span = u64(1) << k;
            left_[k].assign(n_ + 1, 0);
            right_[k].assign(n_ + 1, 0);
            for (u64 i = 1; i + span - 1 <= n_; ++i) {
                u32 a = left_[k - 1][i], b = left_[k - 1][i + span / 2];
                left_[k][i] = ((*v_)[a] <= (*v_)[b]) ? a : b;
                u32 c = right_[k - 1][i], d = right_[k - 1][i + span / 2];
                right_[k][i] = ((*v_)[d] <= (*v_)[c]) ? d : c;
            }
        }
    }

    u64 argmin_left(u64 l, u64 r) const {
        assert(l >= 1 && l <= r && r <= n_);
        u32 k = bits_for(r - l + 1) - 1;
        u32 a = left_[k][l], b = left_[k][r - (u64(1) << k) + 1];
        return ((*v_)[a] <= (*v_)[b]) ? a : b;
    }

    u64 argmin_right(u64 l, u64 r) const {
        assert(l >= 1 && l <= r && r <= n_);
        u32 k = bits_for(r - l + 1) - 1;
        u32 a = right_[k][l], b = right_[k][r - (u64(1) << k) + 1];
        return ((*v_)[b] <= (*v_)[a]) ? b : a;
    }

   private:
    const std::vector<u32>* v_;
    u64 n_ = 0;
    std::vector<std::vector<u32>> left_, right_;
};

}  // namespace augms
