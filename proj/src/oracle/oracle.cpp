#include "oracle.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace augms::oracle {

std::vector<u32> naive_sa(const std::vector<u8>& t) {
    const u64 n = t.size();
    assert(n >= 1 && n <= 200000);
    std::vector<u32> sa(n + 1);
    for (u64 k = 1; k <= n; ++k) sa[k] = static_cast<u32>(k);
    std::sort(sa.begin() + 1, sa.end(), [&](u32 a, u32 b) {
        // Suffix t[a..n] vs t[b..n], 1-based. The sentinel ends every
        // suffix, so one is never a proper prefix of the other.
        while (t[a - 1] == t[b - 1]) ++a, ++b;
        return t[a - 1] < t[b - 1];
    });
    return sa;
}

std::vector<u8> naive_bwt(const std::vector<u8>& t, const std::vector<u32>& sa) {
    const u64 n = t.size();
    std::vector<u8> bwt(n + 1, 0);
    for (u64 k = 1; k <= n; ++k) bwt[k] = sa[k] == 1 ? t[n - 1] : t[sa[k] - 2];
    return bwt;
}

std::vector<u32> naive_lcp(const std::vector<u8>& t, const std::vector<u32>& sa) {
    const u64 n = t.size();
    std::vector<u32> lcp(n + 1, 0);
    for (u64 k = 2; k <= n; ++k)
        lcp[k] = static_cast<u32>(lce(t, sa[k - 1], sa[k]));
    return lcp;
}

u64 lce(const std::vector<u8>& t, u64 i, u64 j) {
    const u64 n = t.size();
    assert(i >= 1 && i <= n && j >= 1 && j <= n);
    u64 l = 0;
    while (i + l <= n && j + l <= n && t[i + l - 1] == t[j + l - 1]) ++l;
    return l;
}

std::vector<ms_entry> ms(const std::vector<u8>& t, const std::vector<u8>& p) {
    const u64 n = t.size();
    const u64 m = p.size();
    assert(m >= 1);
    std::vector<ms_entry> out(m + 1);
    // cur[j] = match length of p[i..] against t[j..]; filled right to left
    // over i from nxt (= row i+1). The sentinel never equals a pattern
    // byte, so matches cannot run into or past it.
    std::vector<u32> cur(n + 2, 0), nxt(n + 2, 0);
    for (u64 i = m; i >= 1; --i) {
        u64 best = 0, best_j = 0;
        for (u64 j = n; j >= 1; --j) {
            cur[j] = (p[i - 1] == t[j - 1]) ? nxt[j + 1] + 1 : 0;
            if (cur[j] >= best) {
                // >= while scanning right to left gives the leftmost max
                best = cur[j];
                best_j = j;
            }
        }
        out[i] = best == 0 ? ms_entry{0, 0} : ms_entry{best_j, best};
        std::swap(cur, nxt);
    }
    return out;
}

std::vector<mem> mems(const std::vector<u8>& t, const std::vector<u8>& p, u64 min_len) {
    auto v = ms(t, p);
    const u64 m = p.size();
    if (min_len == 0) min_len = 1;
    std::vector<mem> out;
    for (u64 i = 1; i <= m; ++i) {
        if (v[i].len < min_len) continue;
        // A shorter-or-equal match one position to the left means the
        // match at i is not a suffix of a longer one, i.e. left-maximal.
        if (i > 1 && v[i - 1].len > v[i].len) continue;
        out.push_back(mem{i, v[i].len});
    }
    return out;
}

namespace {

std::string fail(const char* what, u64 e1, u64 s2, u64 tr) {
    std::ostringstream os;
    os << what << " (e1=" << e1 << " s2=" << s2 << " t=" << tr << ")";
    return os.str();
}

}  // namespace

report check_thresholds(const std::vector<u8>& t, const std::vector<pair_info>& pairs) {
    const u64 n = t.size();
    assert(n <= 2000);
    auto sa = naive_sa(t);
    auto bwt = naive_bwt(t, sa);

    for (const auto& pr : pairs) {
        const u64 e1 = pr.e1, s2 = pr.s2, tr = pr.t;
        if (!(1 <= e1 && e1 < s2 && s2 <= n))
            return {false, fail("rows out of order", e1, s2, tr)};
        if (!(e1 < tr && tr <= s2))
            return {false, fail("threshold outside (e1, s2]", e1, s2, tr)};
        const u8 c = bwt[e1];
        if (bwt[s2] != c)
            return {false, fail("end and start rows carry different symbols", e1, s2, tr)};
        for (u64 k = e1 + 1; k < s2; ++k)
            if (bwt[k] == c)
                return {false, fail("gap contains the symbol, rows are not adjacent runs", e1, s2, tr)};

        // Position-by-position ordering: above the threshold the earlier
        // run is at least as close, at and below it the later run is.
        for (u64 k = e1 + 1; k < s2; ++k) {
            const u64 up = lce(t, sa[e1], sa[k]);
            const u64 dn = lce(t, sa[k], sa[s2]);
            if (k < tr && up < dn)
                return {false, fail("row below threshold is closer to the later run", e1, s2, tr)};
            if (k >= tr && up > dn)
                return {false, fail("row at/above threshold is closer to the earlier run", e1, s2, tr)};
        }

        if (pr.used_e != (tr > e1 + 1))
            return {false, fail("used_e flag disagrees with the gap shape", e1, s2, tr)};
        if (pr.used_s != (tr < s2))
            return {false, fail("used_s flag disagrees with the gap shape", e1, s2, tr)};
        if (pr.used_e) {
            if (pr.lce_e != lce(t, sa[e1], sa[tr - 1]))
                return {false, fail("stored e-side value is not lce(sa[e1], sa[t-1])", e1, s2, tr)};
            // Safety: stored value never exceeds the true distance to any
            // row on its side of the threshold.
            for (u64 k = e1 + 1; k < tr; ++k)
                if (pr.lce_e > lce(t, sa[e1], sa[k]))
                    return {false, fail("e-side value overshoots a row below the threshold", e1, s2, tr)};
        } else if (pr.lce_e != 0) {
            return {false, fail("unused e-side value not stored as 0", e1, s2, tr)};
        }
        if (pr.used_s) {
            if (pr.lce_s != lce(t, sa[tr], sa[s2]))
                return {false, fail("stored s-side value is not lce(sa[t], sa[s2])", e1, s2, tr)};
            for (u64 k = tr; k < s2; ++k)
                if (pr.lce_s > lce(t, sa[k], sa[s2]))
                    return {false, fail("s-side value overshoots a row at/above the threshold", e1, s2, tr)};
        } else if (pr.lce_s != 0) {
            return {false, fail("unused s-side value not stored as 0", e1, s2, tr)};
        }
    }
    return {true, ""};
}

}  // namespace augms::oracle
