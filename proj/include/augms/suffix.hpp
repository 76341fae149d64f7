// Suffix array (SA-IS), inverse, BWT, LCP (Kasai), and LCP range minima.
// Construction-time structures; the query index keeps only what it samples.
#pragma once

#include <limits>
#include <memory>

#include "augms/common.hpp"
#include "augms/rmq.hpp"
#include "augms/text.hpp"

namespace augms {
namespace detail {

inline constexpr u32 SA_EMPTY = std::numeric_limits<u32>::max();

// Induced sorting. t[0..n-1] over [0,K), t[n-1] the unique smallest symbol.
template <typename CharT>
void sais(const CharT* t, u32* sa, u64 n, u64 K) {
    assert(n >= 1);
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<bool> is_s(n);
    is_s[n - 1] = true;
    for (u64 i = n - 1; i-- > 0;)
        is_s[i] = t[i] < t[i + 1] || (t[i] == t[i + 1] && is_s[i + 1]);
    auto is_lms = [&](u64 i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

    std::vector<u32> cnt(K, 0);
    for (u64 i = 0; i < n; ++i) cnt[t[i]]++;
    std::vector<u32> b(K);
    auto bkt_heads = [&] {
        u32 s = 0;
        for (u64 c = 0; c < K; ++c) { b[c] = s; s += cnt[c]; }
    };
    auto bkt_tails = [&] {
        u32 s = 0;
        for (u64 c = 0; c < K; ++c) { s += cnt[c]; b[c] = s; }
    };

    auto induce = [&](auto&& place_lms) {
        std::fill(sa, sa + n, SA_EMPTY);
        bkt_tails();
        place_lms();
        bkt_heads();
        for (u64 i = 0; i < n; ++i) {
            u32 p = sa[i];
            if (p == SA_EMPTY || p == 0) continue;
            if (!is_s[p - 1]) sa[b[t[p - 1]]++] = p - 1;
        }
        bkt_tails();
        for (u64 i = n; i-- > 0;) {
            u32 p = sa[i];
            if (p == SA_EMPTY || p == 0) continue;
            if (is_s[p - 1]) sa[--b[t[p - 1]]] = p - 1;
        }
    };

    std::vector<u32> lms_pos;
    for (u64 i = 1; i < n; ++i)
        if (is_lms(i)) lms_pos.push_back(static_cast<u32>(i));
    u64 n1 = lms_pos.size();

    // Pass 1: LMS substrings in arbitrary in-bucket order, then induce.
    induce([&] {
        for (u32 p : lms_pos) sa[--b[t[p]]] = p;
    });

    std::vector<u32> sorted_lms;
    sorted_lms.reserve(n1);
    for (u64 i = 0; i < n; ++i)
        if (sa[i] != SA_EMPTY && is_lms(sa[i])) sorted_lms.push_back(sa[i]);

    // Name LMS substrings in sorted order. Substring of p runs to the next
    // LMS position inclusive; equal characters over equal length imply
    // equal types inside, so a character compare suffices.
    std::vector<u32> next_lms(n, 0);
    for (u64 k = 0; k + 1 < n1; ++k) next_lms[lms_pos[k]] = lms_pos[k + 1];
    next_lms[lms_pos[n1 - 1]] = static_cast<u32>(n - 1);

    std::vector<u32> name_of(n, 0);
    u32 names = 0;
    u32 prev = SA_EMPTY;
    for (u32 p : sorted_lms) {
        if (prev != SA_EMPTY) {
            u64 la = next_lms[prev] - prev, lb = next_lms[p] - p;
            bool eq = la == lb && prev != n - 1 && p != n - 1;
            for (u64 i = 0; eq && i <= la; ++i) eq = t[prev + i] == t[p + i];
            if (!eq) ++names;
        }
        name_of[p] = names;
        prev = p;
    }

    std::vector<u32> order(n1);
    if (names + 1 == n1) {
        order = sorted_lms;
    } else {
        std::vector<u32> reduced(n1), sa1(n1);
        for (u64 k = 0; k < n1; ++k) reduced[k] = name_of[lms_pos[k]];
        sais<u32>(reduced.data(), sa1.data(), n1, names + 1);
        for (u64 k = 0; k < n1; ++k) order[k] = lms_pos[sa1[k]];
    }

    // Pass 2: LMS in sorted order seed the final induction.
    induce([&] {
        for (u64 k = n1; k-- > 0;) sa[--b[t[order[k]]]] = order[k];
    });
}

}  // namespace detail

// All arrays 1-based with slot 0 unused and zero.
struct suffix_bundle {
    text txt;
    std::vector<u32> sa;
    std::vector<u32> isa;
    std::vector<u8> bwt;
    std::vector<u32> lcp;  // lcp[k] = LCE of suffixes sa[k-1], sa[k]; lcp[1] = 0

    u64 n() const { return txt.size(); }

    // Built on first use; do not move the bundle afterwards (the table
    // points into lcp).
    const argmin_table& argmins() {
        if (!argm_) argm_ = std::make_unique<argmin_table>(lcp);
        return *argm_;
    }

   private:
    std::unique_ptr<argmin_table> argm_;
};

inline suffix_bundle build_suffix_bundle(text t) {
    u64 n = t.size();
    assert(n >= 2);
    assert(n < std::numeric_limits<u32>::max());
    assert(t[n] == SENTINEL);

    suffix_bundle b;
    b.txt = std::move(t);
    const text& txt = b.txt;

    std::vector<u32> sa0(n);
    detail::sais<u8>(txt.data1(), sa0.data(), n, 256);

    b.sa.assign(n + 1, 0);
    b.isa.assign(n + 1, 0);
    for (u64 k = 1; k <= n; ++k) {
        b.sa[k] = sa0[k - 1] + 1;
        b.isa[b.sa[k]] = static_cast<u32>(k);
    }

    b.bwt.assign(n + 1, 0);
    for (u64 k = 1; k <= n; ++k)
        b.bwt[k] = b.sa[k] == 1 ? txt[n] : txt[b.sa[k] - 1];

    // Kasai, walking text order so h decreases by at most 1 per step.
    b.lcp.assign(n + 1, 0);
    u64 h = 0;
    for (u64 i = 1; i <= n; ++i) {
        u64 k = b.isa[i];
        if (k > 1) {
            u64 j = b.sa[k - 1];
            while (i + h <= n && j + h <= n && txt[i + h] == txt[j + h]) ++h;
            b.lcp[k] = static_cast<u32>(h);
            if (h) --h;
        } else {
            h = 0;
        }
    }
    return b;
}

// Leftmost position attaining min(lcp[lo..hi]), and that minimum.
inline std::pair<u64, u32> lcp_range_min(suffix_bundle& b, u64 lo, u64 hi) {
    if (lo < 1 || hi > b.n() || lo > hi) throw std::out_of_range("lcp_range_min: bad range");
    u64 p = b.argmins().argmin_left(lo, hi);
    return {p, b.lcp[p]};
}

}  // namespace augms
