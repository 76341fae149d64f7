// One-pass matching statistics, right to left.
//
// Invariant carried between steps: after computing MS[i+1] with len > 0,
// row q satisfies sa[q] = MS[i+1].pos. A step either extends directly
// (BWT[q] already holds P[i]), reinitializes (previous len was 0), or
// jumps to the nearest occurrence of P[i] above or below q. Jump targets
// are always run boundaries, so their SA values are sampled; the side is
// chosen by the threshold row, and in augmented mode the stored boundary
// LCE lets the new length be set without an LCE query whenever the old
// length is at most that bound.
#pragma once

#include <string>

#include "augms/lce.hpp"
#include "augms/rlbwt.hpp"
#include "augms/stats.hpp"
#include "augms/thresholds.hpp"

namespace augms {

struct ms_entry {
    u64 pos = NIL;  // NIL when len = 0
    u64 len = 0;
    bool operator==(const ms_entry&) const = default;
};

// 1-based: entry [i] for pattern position i, slot 0 unused.
using matching_statistics = std::vector<ms_entry>;

enum class ms_mode : u8 { baseline = 0, augmented = 1 };

// Optional per-step record, for tests that pin down exact traces.
struct ms_step {
    enum class kind : u8 { init, reinit, absent, direct, jump_up, jump_down };
    kind k = kind::init;
    bool forced = false;
    bool skipped = false;
    u64 q_before = NIL;
    u64 target = NIL;   // row whose BWT symbol gets consumed
    u64 thr_row = NIL;  // threshold consulted, non-forced jumps only
};

struct compute_opts {
    bool verify_skips = false;           // recompute every skipped LCE and compare
    std::vector<ms_step>* trace = nullptr;  // resized to m+1 when set
};

inline matching_statistics compute_ms(const rlbwt& rb, const threshold_table& thr,
                                      const thr_lce_table& tlce, const lce_backend& lce,
                                      const u8* pat, u64 m, ms_mode mode, query_stats& st,
                                      const compute_opts& opts = {}) {
    if (m == 0) throw std::invalid_argument("empty pattern");
    for (u64 i = 0; i < m; ++i)
        if (pat[i] == SENTINEL) throw std::invalid_argument("pattern contains the sentinel byte");

    matching_statistics ms(m + 1);
    if (opts.trace) opts.trace->assign(m + 1, {});
    auto note = [&](u64 i, ms_step s) {
        if (opts.trace) (*opts.trace)[i] = s;
    };

    u64 q = NIL;
    for (u64 i = m; i >= 1; --i) {
        u8 c = pat[i - 1];

        if (i == m || ms[i + 1].len == 0) {
            // (Re)initialization: any occurrence of c works, the first
            // run's start sample is at hand.
            if (rb.symbol_count(c) == 0) {
                ms[i] = {NIL, 0};
                q = NIL;
                note(i, {.k = ms_step::kind::absent, .q_before = q});
                continue;
            }
            u64 x = rb.runs_of(c).front();
            u64 sa0 = rb.sa_sample(x, run_side::start);
            assert(sa0 >= 2);  // BWT row holds c, so the suffix has a predecessor
            ms[i] = {sa0 - 1, 1};
            q = rb.lf_at_occ(c, 1);
            note(i, {.k = i == m ? ms_step::kind::init : ms_step::kind::reinit,
                     .target = rb.run_start(x)});
            continue;
        }

        u64 x_q = rb.run_of_position(q);
        if (rb.head(x_q) == c) {
            ++st.direct_extensions;
            ms[i] = {ms[i + 1].pos - 1, ms[i + 1].len + 1};
            note(i, {.k = ms_step::kind::direct, .q_before = q, .target = q});
            q = rb.lf_in_run(x_q, q);
            continue;
        }

        u64 total = rb.symbol_count(c);
        if (total == 0) {
            ms[i] = {NIL, 0};
            note(i, {.k = ms_step::kind::absent, .q_before = q});
            q = NIL;
            continue;
        }

        ++st.jumps;
        u64 k = rb.rank(c, q);
        bool forced = k == 0 || k == total;
        bool up;
        u64 thr_row = NIL;
        std::optional<u64> pair;
        if (k == 0) {
            up = false;
        } else if (k == total) {
            up = true;
        } else {
            u64 s2 = *rb.select(c, k + 1);
            u64 xs = rb.run_of_position(s2);
            pair = thr.pair_index(rb, xs);
            thr_row = *thr.lookup(rb, xs);
            up = q < thr_row;
        }

        u64 prev_pos = ms[i + 1].pos, prev_len = ms[i + 1].len;
        u64 occ = up ? k : k + 1;
        u64 target = *rb.select(c, occ);
        u64 xt = rb.run_of_position(target);
        assert(target == (up ? rb.run_end(xt) : rb.run_start(xt)));
        u64 sa_t = rb.sa_sample(xt, up ? run_side::end : run_side::start);

        u64 ell = 0;
        bool skipped = false;
        if (!forced && mode == ms_mode::augmented) {
            auto stored = tlce.lookup(*pair, up ? thr_side::e : thr_side::s);
            if (stored && prev_len <= *stored) {
                // The boundary LCE bounds the real one from below, so the
                // min() the baseline would compute is prev_len already.
                skipped = true;
                ++st.lce_skips;
                ell = prev_len + 1;
                if (opts.verify_skips && lce.lce_nocount(sa_t, prev_pos) < prev_len)
                    throw std::logic_error("skip fired but the recomputed extension is shorter");
            }
        }
        if (!skipped) {
            u64 l = lce.lce(sa_t, prev_pos, st);
            ell = std::min(l, prev_len) + 1;
        }

        ms[i] = {sa_t - 1, ell};
        note(i, {.k = up ? ms_step::kind::jump_up : ms_step::kind::jump_down,
                 .forced = forced,
                 .skipped = skipped,
                 .q_before = q,
                 .target = target,
                 .thr_row = thr_row});
        q = rb.lf_at_occ(c, occ);
    }
    return ms;
}

inline matching_statistics compute_ms(const rlbwt& rb, const threshold_table& thr,
                                      const thr_lce_table& tlce, const lce_backend& lce,
                                      const std::string& pattern, ms_mode mode, query_stats& st,
                                      const compute_opts& opts = {}) {
    return compute_ms(rb, thr, tlce, lce, reinterpret_cast<const u8*>(pattern.data()),
                      pattern.size(), mode, st, opts);
}

struct mem {
    u64 i;    // pattern position, 1-based
    u64 pos;  // text position
    u64 len;
    bool operator==(const mem&) const = default;
};

// A match at i is reported unless it is the tail of the match at i-1
// (len[i-1] = len[i] + 1 covers it entirely).
inline std::vector<mem> extract_mems(const matching_statistics& ms, u64 min_len) {
    std::vector<mem> out;
    u64 m = ms.size() - 1;
    u64 lo = std::max<u64>(min_len, 1);
    for (u64 i = 1; i <= m; ++i)
        if (ms[i].len >= lo && (i == 1 || ms[i - 1].len <= ms[i].len))
            out.push_back({i, ms[i].pos, ms[i].len});
    return out;
}

inline void fold_ms(fnv1a64& h, const matching_statistics& ms) {
    for (u64 i = 1; i < ms.size(); ++i) {
        h.add(ms[i].pos);
        h.add(ms[i].len);
    }
}

}  // namespace augms
