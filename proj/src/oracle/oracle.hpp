// Brute-force reference implementations for tests only. Everything here
// is deliberately independent of the main headers: plain byte vectors in,
// plain numbers out, direct scans instead of indexes. Positions are
// 1-based and the text vector is 0-based internally, matching nothing on
// purpose; adapters in the tests do the shifting.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace augms::oracle {

using u8 = uint8_t;
using u32 = uint32_t;
using u64 = uint64_t;

// t = full text including the trailing sentinel byte 0. Returns 1-based
// suffix start positions in lexicographic order; slot 0 unused.
std::vector<u32> naive_sa(const std::vector<u8>& t);

// bwt[k] = symbol before suffix sa[k], wrapping at the front. Slot 0 unused.
std::vector<u8> naive_bwt(const std::vector<u8>& t, const std::vector<u32>& sa);

// lcp[k] = common prefix length of suffixes sa[k-1], sa[k]; lcp[1] = 0.
std::vector<u32> naive_lcp(const std::vector<u8>& t, const std::vector<u32>& sa);

// Direct character scan, 1-based positions.
u64 lce(const std::vector<u8>& t, u64 i, u64 j);

struct ms_entry {
    u64 pos = 0;  // 0 when len = 0
    u64 len = 0;
};

// Longest prefix of p[i..] occurring anywhere in t, for every i, via one
// O(n*m) dynamic program. Slot 0 unused; pos is the leftmost maximizer.
std::vector<ms_entry> ms(const std::vector<u8>& t, const std::vector<u8>& p);

struct mem {
    u64 i = 0;
    u64 len = 0;
};

// Per-position maximal matches of length >= min_len, from the same DP.
std::vector<mem> mems(const std::vector<u8>& t, const std::vector<u8>& p, u64 min_len);

struct pair_info {
    u64 e1 = 0, s2 = 0, t = 0;  // BWT rows
    u64 lce_e = 0, lce_s = 0;
    bool used_e = false, used_s = false;
};

struct report {
    bool ok = true;
    std::string detail;
};

// Validates threshold pairs against first principles: run geometry, the
// two-sided ordering condition at every row in the gap, the stored side
// values, and their lower-bound (safety) property. Quadratic; n <= 2000.
report check_thresholds(const std::vector<u8>& t, const std::vector<pair_info>& pairs);

}  // namespace augms::oracle
